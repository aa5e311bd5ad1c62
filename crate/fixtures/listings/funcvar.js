function run() {
  return 'running';
}

function Task(period) {
  this.period = period;
  this.go = run;
}

var t = new Task(50);
