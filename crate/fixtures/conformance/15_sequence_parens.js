var a = (1, 2, 3);
for (i = 0, j = 10; i < j; i++, j--) {
  work(i, j);
}
var b = ((x));
