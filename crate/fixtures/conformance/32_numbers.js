var a = 0;
var b = 42;
var c = 3.14;
var d = .5;
var e = 5.;
var f = 1e10;
var g = 2.5e-3;
var h = 0xFF;
var i = 0x0;
