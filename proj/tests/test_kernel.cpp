#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracle_values.hpp"
#include "relucrit/error.hpp"
#include "relucrit/kernel.hpp"

using namespace relucrit;
using std::numbers::pi;

TEST_CASE("kernel matches quadrature of the leaky-ReLU expectation") {
  for (int c = 0; c < 3; ++c) {
    const double* p = oracle::kernel_cases + 5 * c;
    const Vec w{p[0], p[1]}, v{p[2], p[3]};
    CHECK(kernel_f_lambda(w, v, p[4]) == doctest::Approx(oracle::kernel_values[c]).epsilon(1e-10));
  }
}

TEST_CASE("kernel endpoints") {
  const Vec w{1.3, -0.4, 0.2}, v{0.1, 0.9, -0.5};
  // lambda = 0: inner product / 2
  CHECK(kernel_f_lambda(w, v, 0) == doctest::Approx(dot(w, v) / 2).epsilon(1e-15));
  const double t = angle_between(w, v);
  CHECK(kernel_f_lambda(w, v, 1) == doctest::Approx(norm(w) * norm(v) * psi(t) / (2 * pi)).epsilon(1e-14));
  CHECK(psi(0) == doctest::Approx(pi));
  CHECK(psi(pi) == doctest::Approx(0).epsilon(1e-15));
}

TEST_CASE("alpha_from_lambda inverts lambda(alpha)") {
  for (double a : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    const double lam = a * a / (2 + a * a - 2 * a);
    CHECK(alpha_from_lambda(lam) == doctest::Approx(a).epsilon(1e-12));
  }
}

TEST_CASE("kernel properties on random pairs") {
  std::mt19937_64 g(7);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> u(0, 1);
  for (int rep = 0; rep < 100; ++rep) {
    Vec w(4), v(4);
    for (auto& x : w) x = n(g);
    for (auto& x : v) x = n(g);
    const double lam = u(g), s = 0.1 + 3 * u(g);
    Vec ws = w;
    for (auto& x : ws) x *= s;
    CHECK(kernel_f_lambda(w, v, lam) == doctest::Approx(kernel_f_lambda(v, w, lam)).epsilon(1e-13));
    CHECK(kernel_f_lambda(ws, v, lam) == doctest::Approx(s * kernel_f_lambda(w, v, lam)).epsilon(1e-12));
    // gradient against central differences
    const Vec gr = kernel_grad_lambda(w, v, lam);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vec a = w, b = w;
      const double h = 1e-6;
      a[i] += h;
      b[i] -= h;
      const double fd = (kernel_f_lambda(a, v, lam) - kernel_f_lambda(b, v, lam)) / (2 * h);
      CHECK(gr[i] == doctest::Approx(fd).epsilon(1e-6).scale(1));
    }
  }
}

TEST_CASE("angle_between edge cases") {
  const Vec z{0, 0}, a{1, 0}, b{-2, 0};
  CHECK_THROWS_AS(angle_between(z, a), Error);
  CHECK(angle_between(a, b) == doctest::Approx(pi));
  CHECK(angle_between(a, a) == 0.0);
}

TEST_CASE("Monte Carlo estimate brackets the closed form") {
  const Vec w{0.7, -0.3, 1.1}, v{0.2, 0.5, -0.8};
  for (double lam : {0.0, 0.3, 1.0}) {
    const McEstimate e = mc_kernel_estimate(w, v, lam, 200000, 42);
    CHECK(std::abs(e.mean - kernel_f_lambda(w, v, lam)) <= 4 * e.stderr_);
  }
}

TEST_CASE("unit-vector kernel values") {
  const Vec e1{1, 0}, e2{0, 1};
  CHECK(kernel_f_lambda(e1, e1, 1) == doctest::Approx(0.5));
  CHECK(kernel_f_lambda(e1, e2, 1) == doctest::Approx(1 / (2 * pi)));
  const Vec g = kernel_grad_lambda(e1, e2, 1);
  CHECK(g[0] == doctest::Approx(1 / (2 * pi)));
  CHECK(g[1] == doctest::Approx(0.25));
}

TEST_CASE("kernel is invariant under random rotations") {
  std::mt19937_64 g(13);
  std::normal_distribution<double> n;
  const Vec w{0.4, -1.2, 0.7}, v{1.0, 0.3, -0.2};
  for (int rep = 0; rep < 100; ++rep) {
    // random orthogonal matrix by Gram-Schmidt
    double q[3][3];
    for (auto& r : q)
      for (double& x : r) x = n(g);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < i; ++j) {
        const double d = q[i][0] * q[j][0] + q[i][1] * q[j][1] + q[i][2] * q[j][2];
        for (int c = 0; c < 3; ++c) q[i][c] -= d * q[j][c];
      }
      const double s = std::sqrt(q[i][0] * q[i][0] + q[i][1] * q[i][1] + q[i][2] * q[i][2]);
      for (int c = 0; c < 3; ++c) q[i][c] /= s;
    }
    Vec gw(3), gv(3);
    for (int i = 0; i < 3; ++i)
      for (int c = 0; c < 3; ++c) {
        gw[i] += q[i][c] * w[c];
        gv[i] += q[i][c] * v[c];
      }
    const double lam = (rep % 11) / 10.0;
    CHECK(std::abs(kernel_f_lambda(gw, gv, lam) - kernel_f_lambda(w, v, lam)) <= 1e-12);
  }
}
