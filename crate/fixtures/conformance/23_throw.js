function fail(msg) {
  throw new Error(msg);
}
function reject(value) {
  throw { code: 42, value: value };
}
