'use strict';

// Data Structures
module.exports = {
  BST: require('./data_structure/bst'),
  Graph: require('./data_structure/graph'),
  HashTable: require('./data_structure/hash_table'),
  Heap: require('./data_structure/heap'),
  LinkedList: require('./data_structure/linked_list'),
  PriorityQueue: require('./data_structure/priority_queue'),
  Queue: require('./data_structure/queue'),
  Stack: require('./data_structure/stack'),
  Set: require('./data_structure/set'),
  DisjointSetForest: require('./data_structure/disjoint_set_forest')
};
