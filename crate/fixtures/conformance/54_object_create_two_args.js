function Proto() {
  this.base = 1;
}
var configured = Object.create(Proto.prototype, {
  extra: { value: 2 }
});
var direct = Object.create(null);
