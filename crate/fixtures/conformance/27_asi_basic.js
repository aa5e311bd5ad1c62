var a = 1
var b = 2
a = a + b
f()
g()
