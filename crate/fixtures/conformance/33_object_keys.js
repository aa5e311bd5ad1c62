var o = {
  plain: 1,
  'quoted key': 2,
  "double quoted": 3,
  42: 'number key',
  3.5: 'float key',
  if: 'keyword key'
};
