function identity(v) {
  return v;
}
function Filter(fn) {
  this.test = fn;
  this.fallback = identity;
}
var f = new Filter(identity);
