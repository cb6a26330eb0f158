#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace relucrit {

using Vec = std::vector<double>;
using ConstRow = std::span<const double>;

double dot(ConstRow a, ConstRow b);
double norm(ConstRow a);

// Angle in [0, pi]. Throws ZeroVector / DomainError.
double angle_between(ConstRow w, ConstRow v);

double kernel_f_lambda(ConstRow w, ConstRow v, double lam);
Vec kernel_grad_lambda(ConstRow w, ConstRow v, double lam);

// Leaky slope alpha in [0,1] with lambda(alpha) = alpha^2 / (2 + alpha^2 - 2 alpha).
double alpha_from_lambda(double lam);

struct McEstimate {
  double mean = 0;
  double stderr_ = 0;
};

McEstimate mc_kernel_estimate(ConstRow w, ConstRow v, double lam, std::size_t n, std::uint64_t seed);

// Psi(x) = sin x + (pi - x) cos x; f(w,v) = |w||v| Psi(theta) / (2 pi) at lambda = 1.
double psi(double x);

}  // namespace relucrit
