var a = -x;
var b = +y;
var c = !done;
var d = ~bits;
var e = typeof thing;
var f = void 0;
delete obj.key;
i++;
j--;
++i;
--j;
var g = i++ + ++j;
