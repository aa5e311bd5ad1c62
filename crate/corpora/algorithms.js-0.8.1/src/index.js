'use strict';

var lib = {
  DataStructure: require('./data_structure'),
  Graph: require('./graph'),
  Math: require('./math'),
  Search: require('./search'),
  Sorting: require('./sorting'),
  String: require('./string')
};

module.exports = lib;
