#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "relucrit/charts.hpp"
#include "relucrit/error.hpp"
#include "relucrit/objective.hpp"

using namespace relucrit;
using testutil::max_diff;

TEST_CASE("embed and extract round-trip on every chart") {
  const Chart charts[] = {Chart::delta_sk(), Chart::delta_sk1(), Chart::delta_block(2)};
  for (const Chart& c : charts) {
    Coords xi(c.m);
    for (int i = 0; i < c.m; ++i) xi[i] = 0.3 * i - 0.7;
    for (std::size_t k : {5u, 8u}) {
      const WeightMatrix w = embed(c, xi, k);
      CHECK(fixed_space_deviation(c, w) == 0.0);
      CHECK(extract(c, w) == xi);
      CHECK(isotropy_contains(w, c, 1e-14));
    }
  }
  CHECK_THROWS_AS(embed(Chart::delta_sk(), {1, 2, 3}, 4), Error);
  CHECK_THROWS_AS(Chart::delta_block(1), Error);
}

TEST_CASE("extract rejects matrices off the fixed space") {
  WeightMatrix w = embed(Chart::delta_sk(), {1, 0.2}, 5);
  w(0, 1) += 1e-3;
  CHECK_THROWS_AS(extract(Chart::delta_sk(), w), Error);
}

TEST_CASE("column sums agree with the embedded matrix") {
  const Coords xi{0.9, -0.1, 0.3, 0.2, -0.6};
  const auto cs = column_sums(Chart::delta_sk1(), xi, 7);
  const auto full = embed(Chart::delta_sk1(), xi, 7).column_sums();
  CHECK(cs[0] == doctest::Approx(full[0]));
  CHECK(cs[1] == doctest::Approx(full[6]));
}

TEST_CASE("group action composes") {
  std::mt19937_64 g(3);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t k = 6;
    const WeightMatrix w = testutil::random_matrix(g, k);
    const auto a = testutil::random_perm(g, k), b = testutil::random_perm(g, k);
    const auto c = testutil::random_perm(g, k), d = testutil::random_perm(g, k);
    const WeightMatrix lhs = group_act(a, c, group_act(b, d, w));
    const WeightMatrix rhs = group_act(compose(a, b), compose(c, d), w);
    CHECK(max_diff(lhs, rhs) == 0.0);
  }
}

TEST_CASE("objective is invariant and gradient equivariant under the group") {
  std::mt19937_64 g(11);
  for (int rep = 0; rep < 25; ++rep) {
    const std::size_t k = 3 + rep % 6;
    const WeightMatrix w = testutil::random_matrix(g, k);
    const auto r = testutil::random_perm(g, k), e = testutil::random_perm(g, k);
    const double lam = (rep % 5) / 4.0;
    const WeightMatrix gw = group_act(r, e, w);
    CHECK(objective_full(gw, lam) == doctest::Approx(objective_full(w, lam)).epsilon(1e-12));
    CHECK(max_diff(gradient_full(gw, lam), group_act(r, e, gradient_full(w, lam))) <= 1e-12);
  }
}

TEST_CASE("isotypic parts are orthogonal and reconstruct") {
  std::mt19937_64 g(5);
  for (int rep = 0; rep < 20; ++rep) {
    const WeightMatrix w = testutil::random_matrix(g, 4 + rep % 5);
    const IsotypicParts p = isotypic_project(w);
    const WeightMatrix* parts[] = {&p.part_I, &p.part_C1, &p.part_R1, &p.part_A};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(std::abs(frobenius_dot(*parts[i], *parts[j])) <= 1e-12);
    CHECK(max_diff(p.part_I + p.part_C1 + p.part_R1 + p.part_A, w) <= 1e-12);
    // idempotent
    CHECK(max_diff(isotypic_project(p.part_A).part_A, p.part_A) <= 1e-12);
  }
}

TEST_CASE("admissibility") {
  const WeightMatrix v = WeightMatrix::identity(3);
  CHECK(in_omega_a(embed(Chart::delta_sk(), {1, 0.2}, 3), v));
  CHECK_FALSE(in_omega_a(WeightMatrix(3, 3, 0.4), v));
}
