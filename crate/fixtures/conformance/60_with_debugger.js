with (Math) {
  var r = cos(PI);
}
debugger;
