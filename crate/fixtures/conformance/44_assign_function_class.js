Queue = function () {
  this.entries = [];
};
Queue.prototype.enqueue = function (v) {
  this.entries.push(v);
};
var q = new Queue();
