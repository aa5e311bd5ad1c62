function A() {
  this.a = 1;
}
function B() {
  this.b = 2;
}
function C() {
  this.c = 3;
}
B.prototype = new A();
C.prototype = Object.create(B.prototype);
var a = new A();
var b = new B();
var c = new C();
