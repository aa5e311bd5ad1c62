var deep = f(g(h([1, [2, [3, [4]]]], { a: { b: { c: [x, (y + (z * (w - 1)))] } } })));
if (a) { if (b) { if (c) { if (d) { leaf(); } } } }
