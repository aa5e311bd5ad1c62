for (var key in obj) {
  visit(key, obj[key]);
}
for (name in registry) {
  count++;
}
