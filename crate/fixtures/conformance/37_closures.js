function makeCounter() {
  var count = 0;
  return function () {
    count += 1;
    return count;
  };
}
var tick = makeCounter();
tick();
