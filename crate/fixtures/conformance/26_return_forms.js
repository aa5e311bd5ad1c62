function a() {
  return;
}
function b() {
  return 1 + 2;
}
function c(x) {
  if (x) return early(x);
  return late();
}
