function Lost() {
  this.x = 1;
}
Lost.prototype.find = function () {
  return this.x;
};
var keeper = { use: function () {} };
