var a = 'single';
var b = "double";
var c = 'it\'s';
var d = "say \"hi\"";
var e = 'tab\t nl\n null\0 hex\x41 uniB';
var f = 'line\
continued';
var g = '// not a comment';
var h = "/* neither */";
