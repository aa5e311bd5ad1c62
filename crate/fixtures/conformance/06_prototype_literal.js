function Shape(kind) {
  this.kind = kind;
}
Shape.prototype = {
  area: function () {
    return 0;
  },
  sides: 0,
  describe: function () {
    return this.kind;
  }
};
var s = new Shape('blob');
