switch (mode) {
  case 'a':
    one();
    break;
  case 'b':
  case 'c':
    two();
    break;
  default:
    fallback();
}
function pick(n) {
  switch (n) {
    case 1: return 'one';
  }
}
