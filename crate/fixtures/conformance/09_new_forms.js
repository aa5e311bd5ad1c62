function Thing() {}
var a = new Thing;
var b = new Thing();
var c = new ns.Remote();
var d = new (factory())();
var e = new Thing(1, 2, 3);
