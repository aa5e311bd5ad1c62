var a = x || defaultValue;
var b = x && x.field;
var c = flag ? first : second;
var d = p ? q ? 1 : 2 : r ? 3 : 4;
