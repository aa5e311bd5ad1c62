outer: for (var i = 0; i < 10; i++) {
  for (var j = 0; j < 10; j++) {
    if (skip(i, j)) continue outer;
    if (stop(i, j)) break outer;
    if (j > 5) continue;
    if (i > 5) break;
  }
}
