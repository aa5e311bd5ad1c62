var logger = {
  level: 'info',
  log: function (msg) {
    emit(this.level, msg);
  }
};
logger.log('started');
