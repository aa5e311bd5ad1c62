f();
g(1, 'two', h(3));
obj.method(x)(y);
outer(inner(deepest()), mid());
