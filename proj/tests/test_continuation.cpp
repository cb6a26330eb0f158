#include <cmath>

#include "doctest.h"
#include "oracle_values.hpp"
#include "relucrit/continuation.hpp"
#include "relucrit/error.hpp"
#include "relucrit/families.hpp"
#include "relucrit/objective.hpp"

using namespace relucrit;

TEST_CASE("type II critical point at k=6 matches the full-matrix oracle") {
  const Coords x = consistency_point(Family::II, 6, default_seeds()).xi;
  const NewtonResult r = direct_jump(Chart::delta_sk1(), x, 6);
  for (int i = 0; i < 5; ++i) CHECK(r.x[i] == doctest::Approx(oracle::typeII_k6_critical[i]).epsilon(1e-9));
  CHECK(r.residual <= 1e-12);
}

TEST_CASE("published critical points for types A and I at k=6") {
  const auto seeds = default_seeds();
  const Coords a = sk_to_sk1(direct_jump(Chart::delta_sk(), consistency_point(Family::A, 6, seeds).xi, 6).x);
  const double pa[5] = {-0.663397, 0.330710, 0.330710, 0.330710, -0.663397};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(a[i] - pa[i]) <= 5e-7);
  const Coords t = direct_jump(Chart::delta_sk1(), consistency_point(Family::I, 6, seeds).xi, 6).x;
  const double pi_[5] = {-0.587730, 0.391154, -0.0137989, 0.0167703, 1.0683956};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(t[i] - pi_[i]) <= 5e-7);
}

TEST_CASE("p=0 derivative") {
  const Coords x = consistency_point(Family::A, 6, default_seeds()).xi;
  const P0Derivative d = initial_derivative_p0(x[0] - 1, 6);
  CHECK(d.xi_prime[0] == doctest::Approx(oracle::typeA_k6_derivative[0]).epsilon(1e-6));
  CHECK(d.xi_prime[1] == doctest::Approx(oracle::typeA_k6_derivative[1]).epsilon(1e-6));
  CHECK(d.A1_printed == doctest::Approx(4.9889).epsilon(2e-4));
  CHECK(d.A2_printed == doctest::Approx(-9.7101).epsilon(2e-4));
  // the derivative keeps column sums fixed to first order only through the forced common term
  CHECK(d.A1 * d.xi_prime[0] + d.A2 * d.xi_prime[1] == doctest::Approx(0).scale(1e-9));
}

TEST_CASE("p=0 coefficients grow like k") {
  const Coords x = consistency_point(Family::A, 1e4, default_seeds()).xi;
  const P0Derivative d = initial_derivative_p0(x[0] - 1, 1e4);
  CHECK(d.A1 / 1e4 == doctest::Approx(1).epsilon(1e-3));
  CHECK(d.A2 / 1e4 == doctest::Approx(-2).epsilon(1e-3));
}

TEST_CASE("p=1 derivative against the oracle and finite differences") {
  const auto seeds = default_seeds();
  const Coords x = consistency_point(Family::II, 6, seeds).xi;
  const P1Derivative d = initial_derivative_p1(coords_to_seed(Chart::delta_sk1(), x), 6);
  for (int i = 0; i < 5; ++i) CHECK(d.xi_prime[i] == doctest::Approx(oracle::typeII_k6_derivative[i]).epsilon(1e-5));
  for (Family f : {Family::I, Family::II}) {
    const Coords x10 = consistency_point(f, 10, seeds).xi;
    const Coords p = initial_derivative_p1(coords_to_seed(Chart::delta_sk1(), x10), 10).xi_prime;
    const Coords fd = derivative_fd_oracle(Chart::delta_sk1(), x10, 10, 1e-4);
    double scale = 0, diff = 0;
    for (int i = 0; i < 5; ++i) {
      scale = std::max(scale, std::abs(fd[i]));
      diff = std::max(diff, std::abs(fd[i] - p[i]));
    }
    CHECK(diff <= 1e-4 * scale);
  }
}

TEST_CASE("det J* grows with k") {
  const auto seeds = default_seeds();
  const Coords x6 = consistency_point(Family::II, 6, seeds).xi;
  const Coords x100 = consistency_point(Family::II, 100, seeds).xi;
  const double d6 = initial_derivative_p1(coords_to_seed(Chart::delta_sk1(), x6), 6).det_jstar;
  const double d100 = initial_derivative_p1(coords_to_seed(Chart::delta_sk1(), x100), 100).det_jstar;
  CHECK(std::abs(d100) > std::abs(d6));
  CHECK(d6 != 0.0);
}

TEST_CASE("lambda path reaches the direct jump endpoint") {
  const auto seeds = default_seeds();
  for (Family f : {Family::A, Family::II}) {
    const Chart c = chart_for(f);
    const Coords x = consistency_point(f, 8, seeds).xi;
    const LambdaPath p = lambda_path(c, x, 8, 0.05);
    REQUIRE(p.complete);
    CHECK(p.used_derivative);
    CHECK(p.samples.front().lambda == doctest::Approx(0.05));
    CHECK(p.samples.back().lambda == 1.0);
    const Coords j = direct_jump(c, x, 8).x;
    for (std::size_t i = 0; i < j.size(); ++i) CHECK(std::abs(j[i] - p.samples.back().xi[i]) <= 1e-10);
    // every sample is a critical point of its own F_lambda
    for (const auto& s : p.samples)
      if (s.lambda > 0) CHECK(inf_norm(gradient_reduced(c, s.xi, 8, s.lambda)) <= 1e-10);
  }
}

TEST_CASE("path csv is deterministic") {
  const Coords x = consistency_point(Family::A, 6, default_seeds()).xi;
  const auto a = path_csv(lambda_path(Chart::delta_sk(), x, 6, 0.1).samples);
  const auto b = path_csv(lambda_path(Chart::delta_sk(), x, 6, 0.1).samples);
  CHECK(a == b);
  CHECK(a.rfind("lambda,", 0) == 0);
}

TEST_CASE("finite-difference oracle step range") {
  const Coords x = consistency_point(Family::A, 6, default_seeds()).xi;
  CHECK_THROWS_AS(derivative_fd_oracle(Chart::delta_sk(), x, 6, 1e-7), Error);
  CHECK_THROWS_AS(derivative_fd_oracle(Chart::delta_sk(), x, 6, 0.1), Error);
}
