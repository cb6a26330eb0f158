#pragma once
#include <algorithm>
#include <numeric>
#include <random>

#include "relucrit/charts.hpp"
#include "relucrit/matrix.hpp"

namespace testutil {

inline relucrit::WeightMatrix random_matrix(std::mt19937_64& g, std::size_t k, double scale = 1) {
  std::normal_distribution<double> n(0, scale);
  relucrit::WeightMatrix w(k, k);
  for (double& x : w.data()) x = n(g);
  return w;
}

inline relucrit::Permutation random_perm(std::mt19937_64& g, std::size_t k) {
  relucrit::Permutation p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), g);
  return p;
}

inline double max_diff(const relucrit::WeightMatrix& a, const relucrit::WeightMatrix& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

}  // namespace testutil
