for (var i = 0; i < 10; i++) {
  sum += i;
}
for (;;) {
  break;
}
for (i = start(); ; ) {
  if (done(i)) break;
  i = next(i);
}
