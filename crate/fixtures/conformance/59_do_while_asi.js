do { a(); } while (cond())
b();
do c(); while (flag)
d();
