var a = [];
var b = [1, 2, 3];
var c = [1, , 3];
var d = [[1, 2], [3, 4]];
var e = [f(), obj.g, 'x'];
var trailing = [1, 2, ];
