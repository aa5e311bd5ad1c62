var a = 1 + 2 * 3 - 4 / 5 % 6;
var b = 1 << 2 >> 3 >>> 1;
var c = 1 < 2 && 3 >= 2 || 4 !== 5;
var d = x & 0xff | y ^ z;
var e = 'k' in obj;
var f = err instanceof Error;
var g = 2 + 3 === 5 ? 'yes' : 'no';
