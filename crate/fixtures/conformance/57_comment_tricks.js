// leading comment
var a = 'http://not.a.comment'; // trailing
/* block with // inside
   and more */
var b = 2; /* inline */ var c = 3;
/**
 * doc style
 */
var d = '/* string, not comment */';
