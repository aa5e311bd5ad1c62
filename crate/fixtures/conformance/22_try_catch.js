try {
  risky();
} catch (e) {
  report(e);
}
try {
  open();
} finally {
  close();
}
try {
  both();
} catch (err) {
  log(err);
} finally {
  cleanup();
}
