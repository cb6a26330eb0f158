#pragma once

#include <functional>
#include <vector>

namespace relucrit {

using DenseMatrix = std::vector<std::vector<double>>;
using ResidualFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct NewtonConfig {
  int max_iters = 50;
  double tol_residual = 1e-13;  // infinity norm
  double fd_step = 1e-7;        // relative; the absolute floor is the same value
  bool damping = true;
  // Residual below which a stalled line search counts as converged (rounding floor grows with k).
  double tol_floor = 1e-10;
};

struct NewtonResult {
  std::vector<double> x;
  double residual = 0;
  int iterations = 0;
};

double inf_norm(const std::vector<double>& v);

// Partial-pivot Gaussian elimination. Throws SingularJacobian.
std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b);
double determinant(DenseMatrix a);

DenseMatrix fd_jacobian(const ResidualFn& f, const std::vector<double>& x, double step);

// Throws NoConvergence (iteration cap or stagnation) and SingularJacobian.
NewtonResult newton_solve(const ResidualFn& f, std::vector<double> x0, const NewtonConfig& cfg);

}  // namespace relucrit
