#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracle_values.hpp"
#include "relucrit/error.hpp"
#include "relucrit/families.hpp"
#include "relucrit/objective.hpp"
#include "relucrit/series.hpp"

using namespace relucrit;
using std::numbers::pi;

TEST_CASE("all-equal special points") {
  const GammaPoints g2 = closed_form_gamma_points(2);
  CHECK(g2.y == doctest::Approx(oracle::gamma_k2[0]).epsilon(1e-12));
  CHECK(g2.z == doctest::Approx(oracle::gamma_k2[1]).epsilon(1e-12));
  for (int k = 2; k <= 8; ++k) {
    const GammaPoints g = closed_form_gamma_points(k);
    CHECK(std::abs(psi_k_scaled(g.z, k)) <= 1e-13);
    CHECK(std::abs(psi_k_scaled(g.y, k)) <= 1e-13);
    if (k >= 3) CHECK(gradient_full(WeightMatrix(k, k, g.z), 1).frobenius() <= 1e-10);
    CHECK(z_curve(k, 1).psi_consistent == doctest::Approx(g.z));
  }
  CHECK(z_curve(4, 1).printed == doctest::Approx(0.467996).epsilon(1e-6));
  CHECK(z_curve(4, 0).printed == doctest::Approx(0.25));
}

TEST_CASE("reversed-row point") {
  const ReversedRowPoint r = reversed_row_point(2);
  CHECK(r.x == doctest::Approx(1.068311).epsilon(1e-6));
  CHECK(r.y == doctest::Approx(0.068310).epsilon(1e-5));
  for (int k = 2; k <= 6; ++k) {
    const ReversedRowPoint p = reversed_row_point(k);
    CHECK(std::abs(p.residual_first) <= 1e-12);
    CHECK(std::abs(p.residual_rest) <= 1e-12);
  }
  CHECK_THROWS_AS(reversed_row_point(1), Error);
}

TEST_CASE("closed-form series coefficients") {
  const SeriesModel m = series_model(Family::II);
  CHECK(m.coefficient(0, 5) == doctest::Approx(-3.013).epsilon(3e-4));
  CHECK(m.coefficient(4, 3) == doctest::Approx(-1.699).epsilon(6e-4));
  CHECK(m.coefficient(1, 5) == doctest::Approx(-1.032).epsilon(1e-3));
  CHECK(m.coefficient(0, 4) == doctest::Approx(8 / pi));
  CHECK(m.coefficient(2, 7) == 0.0);
  CHECK_THROWS_AS(series_model(Family::M), Error);
}

TEST_CASE("series approach the solved points") {
  const auto seeds = default_seeds();
  for (Family f : {Family::A, Family::I, Family::II}) {
    const Comparison c = compare_approximations(f, 1e4, seeds);
    for (double e : c.row("a").abs_error) CHECK(e <= 1e-6);
    for (double e : c.row("s").abs_error) CHECK(e <= 1e-7);
  }
  const Comparison a = compare_approximations(Family::A, 1e4, seeds);
  // the extra term helps
  CHECK(a.row("a+").abs_error[0] < a.row("a").abs_error[0]);
}

TEST_CASE("fitted coefficients match the model") {
  const auto r = fit_consistency_coefficients(Family::II, 1e4, 4e4, {{2, 2}, {3, 2}, {4, 2}}, default_seeds());
  for (const auto& c : r) CHECK(c.fitted == doctest::Approx(c.model).epsilon(1e-2));
}

TEST_CASE("decay") {
  const auto seeds = default_seeds();
  const auto ks = geometric_grid(100, 3200, 2);
  CHECK(ks.size() == 6);
  CHECK_THROWS_AS(geometric_grid(10, 5), Error);
  const auto s = decay_scan(Family::II, ks, seeds);
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i].F < s[i - 1].F);
  const DecayFit fit = fit_decay(s);
  CHECK(fit.constant == doctest::Approx(0.5 - 2 / (pi * pi)).epsilon(0.03));
}

TEST_CASE("type II norms and angles follow their expansions") {
  const auto a = asymptotic_angle_check(1e4, default_seeds());
  CHECK(a.size() == 9);
  for (const auto& e : a) CHECK(e.ratio <= 50);
}
