function f() {
  return
  unreachable()
}
function g() {
  return (
    1 + 2)
}
