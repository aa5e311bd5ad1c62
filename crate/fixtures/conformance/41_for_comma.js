for (var i = 0, n = list.length; i < n; i++) {
  handle(list[i]);
}
var x = 1, y = x + 1, z = y + 1;
