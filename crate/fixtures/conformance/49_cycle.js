function Ping() {
  this.p = 1;
}
function Pong() {
  this.q = 2;
}
Ping.prototype = new Pong();
Pong.prototype = new Ping();
var x = new Ping();
var y = new Pong();
