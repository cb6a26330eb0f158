#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "relucrit/charts.hpp"
#include "relucrit/consistency.hpp"
#include "relucrit/newton.hpp"

namespace relucrit {

struct PathSample {
  double lambda = 0;
  Coords xi;
  double residual_norm = 0;
};

// Newton on gradient_reduced / lam, so the stopping test is scale-free in lam.
NewtonResult lambda_step_solve(const Chart& c, const Coords& guess, double k, double lam, const NewtonConfig& cfg = {});
NewtonResult direct_jump(const Chart& c, const Coords& xi0, double k, const NewtonConfig& cfg = {});

struct LambdaPath {
  std::vector<PathSample> samples;
  bool complete = false;
  std::string error;
  bool used_derivative = false;
};

LambdaPath lambda_path(const Chart& c, const Coords& xi0, double k, double lam_inc, const NewtonConfig& cfg = {});

// p = 0, type A root.
struct P0Derivative {
  double A1 = 0, A2 = 0;
  double A1_printed = 0, A2_printed = 0;
  Coords xi_prime;
};
P0Derivative initial_derivative_p0(double rho_root, double k);

using Lin5 = std::array<double, 5>;

// Linear-in-xihat pieces at a p = 1 consistency point, one entry per coordinate direction.
struct SensitivityCoefficients {
  double k = 0, tau0 = 0, kappa0 = 0, A = 0, Ak = 0;
  double Theta0 = 0, Lambda0 = 0;
  double a_ii = 0, a_ij = 0, a_ik = 0, a_kj = 0, a_kk = 0;
  Lin5 N{}, Nk{}, D{}, Dk{};
  Lin5 R{}, S{}, J{}, Kkj{}, Kik{};
  Lin5 Eij{}, Eik{}, Eii{}, Ekj{}, Ekk{};
  Lin5 Fij{}, Fik{}, Fii{}, Fkj{}, Fkk{};
};

SensitivityCoefficients sensitivity_coefficients(const ConsistencySeed& t, double k);

struct P1Derivative {
  Coords xi_prime;
  std::array<Lin5, 3> Jzeta{};  // rows: zeta_1..3, 2 pi scaled
  double det_jstar = 0;
  std::vector<double> column_derivative;
};
P1Derivative initial_derivative_p1(const ConsistencySeed& t, double k);

Coords derivative_fd_oracle(const Chart& c, const Coords& xi0, double k, double delta, const NewtonConfig& cfg = {});

// lambda, xi_1..xi_m, residual_norm; 17 significant digits, LF.
std::string path_csv(const std::vector<PathSample>& samples);

}  // namespace relucrit
