loop: while (true) {
  if (done()) break loop;
  advance();
}
