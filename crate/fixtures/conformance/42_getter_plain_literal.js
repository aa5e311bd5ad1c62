var config = {
  get mode() {
    return this._mode || 'default';
  },
  set mode(m) {
    this._mode = m;
  },
  ready: true
};
