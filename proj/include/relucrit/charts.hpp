#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "relucrit/matrix.hpp"

namespace relucrit {

enum class ChartKind { DeltaSk, DeltaSk1, DeltaBlock };

struct Chart {
  ChartKind kind = ChartKind::DeltaSk;
  int p = 0;
  int m = 2;

  static Chart delta_sk() { return {ChartKind::DeltaSk, 0, 2}; }
  static Chart delta_sk1() { return {ChartKind::DeltaSk1, 1, 5}; }
  static Chart delta_block(int p);

  std::string name() const;
  // Number of distinct column sums (one per column block).
  int blocks() const { return p == 0 ? 1 : 2; }
};

using Coords = std::vector<double>;
using Permutation = std::vector<std::size_t>;  // i -> perm[i]

WeightMatrix embed(const Chart& c, const Coords& xi, std::size_t k);
Coords extract(const Chart& c, const WeightMatrix& w, double tol = 1e-10);
// Max deviation of w from the chart's equality pattern.
double fixed_space_deviation(const Chart& c, const WeightMatrix& w);

// Distinct column sums; k may be non-integer.
std::vector<double> column_sums(const Chart& c, const Coords& xi, double k);

WeightMatrix group_act(const Permutation& rho, const Permutation& eta, const WeightMatrix& w);
Permutation compose(const Permutation& a, const Permutation& b);  // (a b)(i) = a(b(i))
bool isotropy_contains(const WeightMatrix& w, const Chart& c, double tol);

struct IsotypicParts {
  WeightMatrix part_I, part_C1, part_R1, part_A;
};
IsotypicParts isotypic_project(const WeightMatrix& w);

bool in_omega_a(const WeightMatrix& w, const WeightMatrix& v, double tol = 1e-8);

void check_chart_k(const Chart& c, double k);
void check_coords(const Chart& c, const Coords& xi);

}  // namespace relucrit
