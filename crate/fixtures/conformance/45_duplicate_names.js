function Widget() {
  this.first = true;
}
var ignored = new Widget();
function Widget() {
  this.second = true;
}
