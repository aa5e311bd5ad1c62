function Counter() {
  this.value = 0;
}
Counter.prototype.increment = function () {
  this.value += 1;
};
Counter.prototype.limit = 100;
var c = new Counter();
