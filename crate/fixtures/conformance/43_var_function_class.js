var Stack = function () {
  this.items = [];
};
Stack.prototype.push = function (v) {
  this.items.push(v);
};
var s = new Stack();
