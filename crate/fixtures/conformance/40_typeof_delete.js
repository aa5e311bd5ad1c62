if (typeof window !== 'undefined') {
  attach(window);
}
var had = delete cache.entry;
var nothing = void 'ignored';
