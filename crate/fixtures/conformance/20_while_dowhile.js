while (pending()) {
  step();
}
do {
  spin();
} while (hot());
do x--; while (x > 0);
