function Base() {
  this.root = true;
}
function Derived() {
  this.leaf = true;
}
Derived.prototype = Object.create(Base.prototype);
var d = new Derived();
