function Temp(celsius) {
  this.celsius = celsius;
}
Temp.prototype = {
  get fahrenheit() {
    return this.celsius * 9 / 5 + 32;
  },
  set fahrenheit(value) {
    this.celsius = (value - 32) * 5 / 9;
  },
  reset: function () {
    this.celsius = 0;
  }
};
var t = new Temp(20);
