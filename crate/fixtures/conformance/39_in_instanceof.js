if ('x' in point && point instanceof Point) {
  accept(point);
}
for (var k in point) {
  if (!(k in defaults)) {
    extra(k);
  }
}
