#pragma once

#include <vector>

#include "relucrit/charts.hpp"
#include "relucrit/matrix.hpp"

namespace relucrit {

constexpr std::size_t kFullSizeLimit = 512;

double objective_full(const WeightMatrix& w, double lam);
WeightMatrix gradient_full(const WeightMatrix& w, double lam);

// Fixed-space matrix as two row/column blocks of (real) sizes n[0] = k - p, n[1] = p.
// Within block a: diagonal D[a], off-diagonal O[a]; block a rows against block b columns: C[a][b].
struct BlockGeometry {
  int nb = 1;
  double n[2] = {0, 0};
  bool off[2] = {true, false};  // block has distinct off-diagonal entries
  double D[2] = {0, 0}, O[2] = {0, 0}, C[2][2] = {{0, 0}, {0, 0}};
  double tau[2] = {0, 0};
  double theta_same[2] = {0, 0};  // distinct rows of one block
  double theta_cross = 0;         // row of block 0 against row of block 1
  double a_diag[2] = {0, 0}, a_off[2] = {0, 0}, a_cross[2] = {0, 0};
  double colsum[2] = {0, 0};
};

BlockGeometry block_geometry(const Chart& c, const Coords& xi, double k);
// Smallest distance of any row-row or row-target angle from {0, pi}.
double min_parallel_margin(const BlockGeometry& g);

struct ReducedGeometry {
  double tau = 0, kappa = 0, Theta = 0, Lambda = 0;
  double alpha_ii = 0, alpha_ij = 0, alpha_ik = 0, alpha_kj = 0, alpha_kk = 0;
  // p = 0 aliases
  double alpha() const { return alpha_ij; }
  double beta() const { return alpha_ii; }
};

ReducedGeometry reduced_geometry(const Chart& c, const Coords& xi, double k, bool require_admissible = true);

// Distinct entries of S = Phi_1 - Phi_0, ordered like the coordinates.
std::vector<double> s_entries(const Chart& c, const Coords& xi, double k);
std::vector<double> gradient_reduced(const Chart& c, const Coords& xi, double k, double lam);
// Number of matrix entries carrying each distinct value.
std::vector<double> multiplicities(const Chart& c, double k);
// Frobenius norm of the full gradient matrix, from the distinct entries.
double gradient_norm_frobenius(const Chart& c, const Coords& xi, double k, double lam);

std::vector<double> critical_residual_lambda1(const Chart& c, const Coords& xi, double k);

double objective_reduced(const Chart& c, const Coords& xi, double k, double lam);

struct StructuredTerms {
  double E1 = 0, E2 = 0, F1 = 0, F2 = 0;
  double G_ii = 0, G_ij = 0, G_ik = 0, G_kk = 0, G_kj = 0;
  double PsiTheta = 0, PsiLambda = 0;
  double gamma_ii = 0, gamma_ij = 0, gamma_ik = 0, gamma_kk = 0, gamma_kj = 0;
  // (k-1)E1 + E2 + (k-1)(k-2)F1/2 + (k-1)F2 - [(k-1)G_ii + (k-1)(k-2)G_ij + (k-1)G_ik + G_kk + (k-1)G_kj]
  //   + k/4 + (k^2 - k)/(4 pi)
  double objective = 0;
};

// lambda = 1 only; p = 1 chart (p = 0 points may be embedded first).
StructuredTerms structured_terms(const Coords& xi5, double k);

// p = 0 coordinates seen as a p = 1 point.
Coords sk_to_sk1(const Coords& xi2);

}  // namespace relucrit
