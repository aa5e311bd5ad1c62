function Point(x, y) {
  this.x = x;
  this.y = y;
  this.dist = function () {
    return this.x * this.x + this.y * this.y;
  };
}
var p = new Point(3, 4);
