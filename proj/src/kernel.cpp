#include "relucrit/kernel.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "relucrit/error.hpp"

namespace relucrit {

using std::numbers::pi;

double dot(ConstRow a, ConstRow b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot: length mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(ConstRow a) {
  double s = 0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

double angle_between(ConstRow w, ConstRow v) {
  const double nw = norm(w), nv = norm(v);
  if (nw == 0 || nv == 0) throw Error(ErrorCode::ZeroVector, "angle_between: zero-norm argument");
  const double c = dot(w, v) / (nw * nv);
  if (std::abs(c) > 1 + 1e-9) throw Error(ErrorCode::DomainError, "angle_between: |cos| exceeds 1");
  // 2 atan2(|u - u'|, |u + u'|) on the unit vectors: same angle as acos(clamp(c)),
  // without the loss of digits near 0 and pi.
  double dm = 0, dp = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double a = w[i] / nw, b = v[i] / nv;
    dm += (a - b) * (a - b);
    dp += (a + b) * (a + b);
  }
  return 2 * std::atan2(std::sqrt(dm), std::sqrt(dp));
}

double psi(double x) { return std::sin(x) + (pi - x) * std::cos(x); }

double kernel_f_lambda(ConstRow w, ConstRow v, double lam) {
  const double th = angle_between(w, v);
  return lam * norm(w) * norm(v) / (2 * pi) * (std::sin(th) - th * std::cos(th)) + dot(w, v) / 2;
}

Vec kernel_grad_lambda(ConstRow w, ConstRow v, double lam) {
  const double th = angle_between(w, v);
  const double nw = norm(w), nv = norm(v);
  const double a = lam / (2 * pi) * nv * std::sin(th) / nw;
  const double b = lam / (2 * pi) * th;
  Vec g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) g[i] = a * w[i] - b * v[i] + v[i] / 2;
  return g;
}

double alpha_from_lambda(double lam) {
  if (!(lam >= 0 && lam <= 1)) throw Error(ErrorCode::DomainError, "lambda outside [0,1]");
  if (lam == 1) return 1;
  // positive root of a^2 (1 - lam) + 2 lam a - 2 lam = 0
  return (-lam + std::sqrt(lam * lam + 2 * lam * (1 - lam))) / (1 - lam);
}

McEstimate mc_kernel_estimate(ConstRow w, ConstRow v, double lam, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::BadInput, "mc_kernel_estimate: n must be >= 1");
  if (w.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "mc_kernel_estimate");
  const double a = alpha_from_lambda(lam);
  const double scale = 2 + a * a - 2 * a;
  auto sigma = [a](double t) { return std::max(t, (1 - a) * t); };
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vec x(w.size());
  double mean = 0, m2 = 0;
  for (std::size_t s = 0; s < n; ++s) {
    for (double& xi : x) xi = gauss(rng);
    const double y = sigma(dot(w, x)) * sigma(dot(v, x)) / scale;
    const double delta = y - mean;
    mean += delta / double(s + 1);
    m2 += delta * (y - mean);
  }
  McEstimate e;
  e.mean = mean;
  e.stderr_ = n > 1 ? std::sqrt(m2 / double(n - 1) / double(n)) : 0;
  return e;
}

}  // namespace relucrit
