var re1 = /ab+c/;
var re2 = /[/\]]+/g;
var re3 = /\d{2,4}/im;
var quotient = a / b / c;
var mixed = f(/x/) / 2;
var after = x ? /y/ : z / 2;
if (s.match(/^--/)) { t(); }
