'use strict';

// Sorting algorithms
module.exports = {
  bubbleSort: require('./algorithms/sorting/bubble_sort'),
  countingSort: require('./algorithms/sorting/counting_sort'),
  heapSort: require('./algorithms/sorting/heap_sort'),
  mergeSort: require('./algorithms/sorting/merge_sort'),
  quicksort: require('./algorithms/sorting/quicksort'),
  selectionSort: require('./algorithms/sorting/selection_sort'),
  radixSort: require('./algorithms/sorting/radix_sort'),
  insertionSort: require('./algorithms/sorting/insertion_sort'),
  shellSort: require('./algorithms/sorting/shell_sort')
};
