'use strict';

// Search algorithms
module.exports = {
  bfs: require('./algorithms/search/bfs'),
  binarySearch: require('./algorithms/search/binarysearch'),
  dfs: require('./algorithms/search/dfs')
};
