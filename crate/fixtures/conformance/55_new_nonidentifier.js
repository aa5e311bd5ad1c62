function pick() {
  return function () {};
}
var a = new (pick())();
var b = new lib.Remote();
var c = new this.Builder();
