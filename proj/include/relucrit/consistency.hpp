#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relucrit/charts.hpp"
#include "relucrit/matrix.hpp"
#include "relucrit/newton.hpp"

namespace relucrit {

// Rows S^i with gradient_full(W, lam)^i = lam S^i + (W - V)^Sigma / 2. Requires W in Omega_a.
WeightMatrix s_map(const WeightMatrix& w);

// Row-difference entries of S followed by column sums - 1; length chart.m.
std::vector<double> consistency_residual(const Chart& c, const Coords& xi, double k);

// (P0 + Theta0)(1 + rho + rho/(k-1)) + beta0 - alpha0 for the DeltaSk chart.
double consistency_residual_closed_p0(double rho, double k);

// (rho) for p = 0, (rho, nu, eps) for p = 1, (rho, eps, eta, nu) for p = 2.
struct ConsistencySeed {
  std::vector<double> values;
};
Coords seed_to_coords(const Chart& c, const ConsistencySeed& t, double k);
ConsistencySeed coords_to_seed(const Chart& c, const Coords& xi);

NewtonResult solve_consistency(const Chart& c, double k, const Coords& seed, const NewtonConfig& cfg = {});

struct KTrack {
  std::vector<std::pair<double, Coords>> path;
  int failed_at = -1;  // index of the k step that failed, -1 when complete
  std::string error;
};

KTrack k_track(const Chart& c, const Coords& xi0, double k_from, double k_to, double dk, const NewtonConfig& cfg = {});
// Steps multiply k by `ratio` (> 1), with the last step landing exactly on k_to.
KTrack k_track_geometric(const Chart& c, const Coords& xi0, double k_from, double k_to, double ratio,
                         const NewtonConfig& cfg = {});

// Distinct entries of Xi(xi0')^Sigma forced at lambda = 0: minus twice the common S value per column block.
std::vector<double> implied_column_derivative(const Chart& c, const Coords& xi0, double k);

// Throws NotAdmissible when the point is within 1e-8 rad of a parallel configuration.
void require_admissible(const Chart& c, const Coords& xi, double k);

}  // namespace relucrit
