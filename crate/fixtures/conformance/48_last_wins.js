function Old() {}
function New() {}
function Thing() {
  this.v = 0;
}
Thing.prototype = new Old();
Thing.prototype = new New();
var o = new Old();
var n = new New();
var t = new Thing();
