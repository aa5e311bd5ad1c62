'use strict';

// Math algorithms
module.exports = {
  fibonacci: require('./algorithms/math/fibonacci'),
  fisherYates: require('./algorithms/math/fisher_yates'),
  gcd: require('./algorithms/math/gcd'),
  extendedEuclidean: require('./algorithms/math/extended_euclidean'),
  newtonSqrt: require('./algorithms/math/newton_sqrt'),
  reservoirSampling: require('./algorithms/math/reservoir_sampling'),
  fastPower: require('./algorithms/math/fast_power'),
  nextPermutation: require('./algorithms/math/next_permutation'),
  powerSet: require('./algorithms/math/power_set'),
  shannonEntropy: require('./algorithms/math/shannon_entropy')
};
