if (a) {
  one();
}
if (b) two();
if (c) {
  three();
} else {
  four();
}
if (d) five(); else if (e) six(); else seven();
