function Comparator(fn) {
  this.compare = fn || defaultCompare;
}
Comparator.prototype.compare = function (a, b) {
  return a - b;
};
var cmp = new Comparator();
