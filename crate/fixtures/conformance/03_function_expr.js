var anon = function (x) {
  return x;
};
var named = function helper(y) {
  return y ? helper(y - 1) : 0;
};
(function () {
  var hidden = 1;
})();
