var value = a.b.c.d;
var item = list[0];
var deep = obj['key'].inner[idx + 1].last;
var call = a.b().c()[0].d;
