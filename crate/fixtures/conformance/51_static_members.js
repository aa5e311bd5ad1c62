function Vec(x, y) {
  this.x = x;
  this.y = y;
}
Vec.zero = function () {
  return new Vec(0, 0);
};
Vec.dimensions = 2;
var v = Vec.zero();
