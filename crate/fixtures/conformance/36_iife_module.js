var Registry = (function RegistryClosure() {
  function Registry(name) {
    this.name = name;
    this.items = [];
  }
  Registry.prototype = {
    register: function (item) {
      this.items.push(item);
    },
    size: function () {
      return this.items.length;
    }
  };
  return Registry;
})();
var shared = new Registry('shared');
