function add(x, y) {
  return x + y;
}
function noargs() {
  return 0;
}
function nested(a) {
  function inner(b) {
    return b * 2;
  }
  return inner(a);
}
