function Dyn() {
  this.fixed = 1;
}
var methodName = 'run';
Dyn.prototype[methodName] = function () {
  return this.fixed;
};
Dyn.prototype['literal'] = 2;
var d = new Dyn();
