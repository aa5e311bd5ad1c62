var a;
var b = 1;
var c = 2, d, e = "three";
var f = b + c;
