use(later);
var later = 5;
hoisted();
function hoisted() {
  return 'ok';
}
