#include "relucrit/continuation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "relucrit/error.hpp"
#include "relucrit/format.hpp"
#include "relucrit/objective.hpp"

namespace relucrit {

using std::numbers::pi;

NewtonResult lambda_step_solve(const Chart& c, const Coords& guess, double k, double lam, const NewtonConfig& cfg) {
  if (!(lam > 0 && lam <= 1)) throw Error(ErrorCode::DomainError, "lambda must lie in (0, 1]");
  check_coords(c, guess);
  auto f = [&](const std::vector<double>& x) {
    require_admissible(c, x, k);
    auto g = gradient_reduced(c, x, k, lam);
    for (double& v : g) v /= lam;
    return g;
  };
  NewtonConfig scaled = cfg;
  scaled.tol_residual = cfg.tol_residual / lam;
  scaled.tol_floor = cfg.tol_floor / lam;
  NewtonResult r = newton_solve(f, guess, scaled);
  r.residual = inf_norm(gradient_reduced(c, r.x, k, lam));
  return r;
}

NewtonResult direct_jump(const Chart& c, const Coords& xi0, double k, const NewtonConfig& cfg) {
  return lambda_step_solve(c, xi0, k, 1.0, cfg);
}

LambdaPath lambda_path(const Chart& c, const Coords& xi0, double k, double lam_inc, const NewtonConfig& cfg) {
  if (!(lam_inc > 0 && lam_inc <= 0.5)) throw Error(ErrorCode::BadInput, "lam_inc must lie in (0, 0.5]");
  LambdaPath path;
  Coords guess = xi0;
  try {
    std::optional<Coords> d;
    if (c.p == 0) d = initial_derivative_p0(xi0[0] - 1, k).xi_prime;
    if (c.p == 1) d = initial_derivative_p1(coords_to_seed(c, xi0), k).xi_prime;
    if (d) {
      for (std::size_t i = 0; i < guess.size(); ++i) guess[i] += lam_inc * (*d)[i];
      path.used_derivative = true;
    }
  } catch (const Error&) {
    guess = xi0;
  }
  const long n = long(std::ceil(1 / lam_inc - 1e-9));
  for (long s = 1; s <= n; ++s) {
    const double lam = s == n ? 1.0 : double(s) * lam_inc;
    try {
      const NewtonResult r = lambda_step_solve(c, guess, k, lam, cfg);
      path.samples.push_back({lam, r.x, r.residual});
      guess = r.x;
    } catch (const Error& e) {
      path.error = e.what();
      return path;
    }
  }
  path.complete = true;
  return path;
}

P0Derivative initial_derivative_p0(double rho, double k) {
  const Chart c = Chart::delta_sk();
  const Coords xi0{1 + rho, -rho / (k - 1)};
  const ReducedGeometry g = reduced_geometry(c, xi0, k);
  const double tr = xi0[0], eps = xi0[1], eta = tr + (k - 2) * eps;
  const double A = 2 * tr * eps + (k - 2) * eps * eps;
  const double tau = g.tau, Th = g.Theta, al = g.alpha(), be = g.beta();
  const double sT = std::sin(Th), sa = std::sin(al), sb = std::sin(be);
  const double tau2 = tau * tau;

  const double J1 = eps - A / tau2 * tr, J2 = eta - A / tau2 * (k - 1) * eps;
  const double K1 = eps * tr / tau2, K2 = (k - 1) * eps * eps / tau2 - 1;
  const double L1 = sa * sa - eps * eps / tau, L2 = sb * sb - tr * tr / tau;
  const double M1 = 1 - tr * tr / tau2, M2 = -(k - 1) * eps * tr / tau2;
  const double N1 = tau + (k - 1) * sa * sa - (k - 1) * eps * eps / tau, N2 = tau + sb * sb - tr * tr / tau;
  const double P = (k - 1) * (sT - sa / tau) - sb / tau;
  const double d = 1 - k * eps;  // = xi01 - xi02

  P0Derivative out;
  // Grouped closed form. Its A2 needs the K2 term (not M1) in the alpha slot, mirroring A1.
  const double w = 2 * A * (k - 1) * d / (tau2 * tau2 * sT) + 2 * d / (tau2 * sT);
  out.A1_printed = P + Th - w * J1 + (k - 1) * tr * d / (tau2 * tau * sa) * L1 + tr * d / (tau2 * tau * sb) * N2 -
                   M1 / (tau * sb) - K1 / (tau * sa);
  out.A2_printed = -P - Th - w * J2 + (k - 1) * eps * d / (tau2 * tau * sa) * N1 +
                   (k - 1) * eps * d / (tau2 * tau * sb) * L2 - K2 / (tau * sa) - M2 / (tau * sb);

  // H12 = (P + Theta)(xi1 - xi2) + beta - alpha, differentiated with the J, K, M first-order pieces.
  const double dtau[2] = {tr / tau, (k - 1) * eps / tau};
  const double Jv[2] = {J1, J2}, Kv[2] = {K1, K2}, Mv[2] = {M1, M2};
  double Av[2];
  for (int l = 0; l < 2; ++l) {
    const double dTh = -2 / (tau2 * sT) * Jv[l];
    const double dsT = A / tau2 * dTh;
    const double dal = Kv[l] / (tau * sa);
    const double dbe = -Mv[l] / (tau * sb);
    const double dsa_t = (eps / tau) * dal / tau - sa * dtau[l] / tau2;
    const double dsb_t = (tr / tau) * dbe / tau - sb * dtau[l] / tau2;
    const double dP = (k - 1) * (dsT - dsa_t) - dsb_t;
    Av[l] = (P + Th) * (l == 0 ? 1 : -1) + (dP + dTh) * d + dbe - dal;
  }
  out.A1 = Av[0];
  out.A2 = Av[1];
  const double col = implied_column_derivative(c, xi0, k)[0];
  const double det = out.A2 - (k - 1) * out.A1;
  if (std::abs(det) <= 1e-14 * (std::abs(out.A1) + std::abs(out.A2)))
    throw Error(ErrorCode::InconsistentSystem, "A2/A1 = k - 1");
  // xi1' + (k-1) xi2' = col, A1 xi1' + A2 xi2' = 0
  const double x2 = -out.A1 * col / det;
  out.xi_prime = {col - (k - 1) * x2, x2};
  return out;
}

SensitivityCoefficients sensitivity_coefficients(const ConsistencySeed& t, double k) {
  if (t.values.size() != 3) throw Error(ErrorCode::DimensionMismatch, "expected (rho, nu, eps)");
  const Chart c = Chart::delta_sk1();
  const double rho = t.values[0], nu = t.values[1], eps = t.values[2];
  const Coords xi = seed_to_coords(c, t, k);
  const ReducedGeometry g = reduced_geometry(c, xi, k);
  SensitivityCoefficients s;
  s.k = k;
  const double tr = 1 + rho, x3 = -nu / (k - 1), rk = rho + (k - 2) * eps, x5 = 1 + nu;
  const double tau = g.tau, kap = g.kappa, tau2 = tau * tau, kap2 = kap * kap;
  s.tau0 = tau;
  s.kappa0 = kap;
  s.A = 2 * tr * eps + (k - 3) * eps * eps + x3 * x3;
  s.Ak = -(tr + (k - 2) * eps) * rk + x3 * x5;
  s.Theta0 = g.Theta;
  s.Lambda0 = g.Lambda;
  s.a_ii = g.alpha_ii;
  s.a_ij = g.alpha_ij;
  s.a_ik = g.alpha_ik;
  s.a_kj = g.alpha_kj;
  s.a_kk = g.alpha_kk;
  const double A = s.A, Ak = s.Ak, sT = std::sin(g.Theta), sL = std::sin(g.Lambda);
  const double s_ij = std::sin(g.alpha_ij), s_ik = std::sin(g.alpha_ik), s_ii = std::sin(g.alpha_ii);
  const double s_kj = std::sin(g.alpha_kj), s_kk = std::sin(g.alpha_kk);

  s.N = {tr, (k - 2) * eps, x3, 0, 0};
  s.Nk = {0, 0, 0, -(k - 1) * rk, x5};
  s.D = {eps, tr + (k - 3) * eps, x3, 0, 0};
  s.Dk = {-rk, -(k - 2) * rk, x5, tr + (k - 2) * eps, x3};

  const double r0 = 2 / (tau2 * sT);
  s.R = {r0 * (tr * A / tau2 - eps), r0 * ((k - 2) * eps * A / tau2 - (tr + (k - 3) * eps)),
         r0 * (nu / (k - 1) * (1 - A / tau2)), 0, 0};
  const double s0 = 1 / (tau * kap * sL);
  s.S = {s0 * (Ak * tr / tau2 + rk), s0 * (Ak * (k - 2) * eps / tau2 + (k - 2) * rk),
         -s0 * (Ak * nu / ((k - 1) * tau2) + x5), -s0 * (Ak * (k - 1) * rk / kap2 + (tr + (k - 2) * eps)),
         s0 * (Ak * x5 / kap2 + nu / (k - 1))};
  for (int l = 0; l < 5; ++l) s.J[l] = A / tau2 * s.R[l];

  s.Kkj = {Ak * s.S[0] / kap2 + tr * sL / (tau * kap), Ak * s.S[1] / kap2 + (k - 2) * eps * sL / (tau * kap),
           Ak * s.S[2] / kap2 - nu * sL / ((k - 1) * tau * kap), Ak * s.S[3] / kap2 + (k - 1) * rk * tau * sL / (kap2 * kap),
           Ak * s.S[4] / kap2 - x5 * tau * sL / (kap2 * kap)};
  s.Kik = {Ak * s.S[0] / tau2 - tr * kap * sL / (tau2 * tau), Ak * s.S[1] / tau2 - (k - 2) * eps * kap * sL / (tau2 * tau),
           Ak * s.S[2] / tau2 + nu * kap * sL / ((k - 1) * tau2 * tau), Ak * s.S[3] / tau2 - (k - 1) * rk * sL / (tau * kap),
           Ak * s.S[4] / tau2 + x5 * sL / (tau * kap)};

  const double t3 = tau2 * tau, k3 = kap2 * kap;
  s.Eij = {eps * tr / (t3 * s_ij), ((k - 2) * eps * eps / tau2 - 1) / (tau * s_ij), -eps * nu / ((k - 1) * t3 * s_ij), 0, 0};
  s.Eik = {-nu * tr / (t3 * (k - 1) * s_ik), -(k - 2) * eps * nu / (t3 * (k - 1) * s_ik),
           (nu * nu / ((k - 1) * (k - 1) * tau2) - 1) / (tau * s_ik), 0, 0};
  s.Eii = {(tr * tr / tau2 - 1) / (tau * s_ii), tr * (k - 2) * eps / (t3 * s_ii), -tr * nu / ((k - 1) * t3 * s_ii), 0, 0};
  s.Ekj = {0, 0, 0, ((k - 1) * rk * rk / kap2 - 1) / (kap * s_kj), -x5 * rk / (k3 * s_kj)};
  s.Ekk = {0, 0, 0, -(k - 1) * x5 * rk / (k3 * s_kk), (x5 * x5 / kap2 - 1) / (kap * s_kk)};

  // d(sin(alpha)/|w|) = cos(alpha) d(alpha)/|w| - sin(alpha) d|w|/|w|^2, with cos(alpha) = entry/|w|
  const double cij = eps / tau2, cik = x3 / tau2, cii = tr / tau2, ckj = -rk / kap2, ckk = x5 / kap2;
  s.Fij = {cij * s.Eij[0] - tr * s_ij / t3, cij * s.Eij[1] - (k - 2) * eps * s_ij / t3, cij * s.Eij[2] + nu * s_ij / ((k - 1) * t3), 0, 0};
  s.Fik = {cik * s.Eik[0] - tr * s_ik / t3, cik * s.Eik[1] - (k - 2) * eps * s_ik / t3, cik * s.Eik[2] + nu * s_ik / ((k - 1) * t3), 0, 0};
  s.Fii = {cii * s.Eii[0] - tr * s_ii / t3, cii * s.Eii[1] - (k - 2) * eps * s_ii / t3, cii * s.Eii[2] + nu * s_ii / ((k - 1) * t3), 0, 0};
  s.Fkj = {0, 0, 0, ckj * s.Ekj[3] + (k - 1) * rk * s_kj / k3, ckj * s.Ekj[4] - x5 * s_kj / k3};
  s.Fkk = {0, 0, 0, ckk * s.Ekk[3] + (k - 1) * rk * s_kk / k3, ckk * s.Ekk[4] - x5 * s_kk / k3};
  return s;
}

P1Derivative initial_derivative_p1(const ConsistencySeed& t, double k) {
  const Chart c = Chart::delta_sk1();
  const Coords xi = seed_to_coords(c, t, k);
  P1Derivative out;
  out.column_derivative = implied_column_derivative(c, xi, k);
  const SensitivityCoefficients s = sensitivity_coefficients(t, k);
  const double tau = s.tau0, kap = s.kappa0, Th = s.Theta0, La = s.Lambda0;

  // h^1 at columns (1, j, k) and h^k at columns (j, k) as linear forms in xihat.
  const double c1 = (k - 2) * std::sin(Th) + kap / tau * std::sin(La) -
                    ((k - 2) * std::sin(s.a_ij) + std::sin(s.a_ik) + std::sin(s.a_ii)) / tau;
  const double ck = ((k - 1) * (tau * std::sin(La) - std::sin(s.a_kj)) - std::sin(s.a_kk)) / kap;
  const double w1[3] = {xi[0], xi[1], xi[2]};
  const double wsum1[3] = {(k - 2) * xi[1], xi[0] + (k - 3) * xi[1], (k - 2) * xi[2]};
  const double wk1[3] = {xi[3], xi[3], xi[4]};
  const double wsumk[2] = {xi[0] + (k - 2) * xi[1], (k - 1) * xi[2]};
  const double wkk[2] = {xi[3], xi[4]};
  Lin5 h1[3]{}, hk[2]{};
  for (int l = 0; l < 5; ++l) {
    Lin5 e{};
    e[l] = 1;
    const double X1[3] = {e[0], e[1], e[2]};
    const double Xs[3] = {(k - 2) * e[1], e[0] + (k - 3) * e[1], (k - 2) * e[2]};
    const double Xk[3] = {e[3], e[3], e[4]};
    const double a = (k - 2) * s.J[l] + s.Kik[l] - (k - 2) * s.Fij[l] - s.Fik[l] - s.Fii[l];
    for (int q = 0; q < 3; ++q)
      h1[q][l] = c1 * X1[q] - Th * Xs[q] - La * Xk[q] + a * w1[q] - s.R[l] * wsum1[q] - s.S[l] * wk1[q];
    h1[0][l] += s.Eii[l];
    h1[1][l] += s.Eij[l];
    h1[2][l] += s.Eik[l];
    const double XkK[2] = {e[3], e[4]};
    const double XsK[2] = {e[0] + (k - 2) * e[1], (k - 1) * e[2]};
    const double b = (k - 1) * (s.Kkj[l] - s.Fkj[l]) - s.Fkk[l];
    for (int q = 0; q < 2; ++q) hk[q][l] = ck * XkK[q] - La * XsK[q] - s.S[l] * wsumk[q] + b * wkk[q];
    hk[0][l] += s.Ekj[l];
    hk[1][l] += s.Ekk[l];
  }
  for (int l = 0; l < 5; ++l) {
    out.Jzeta[0][l] = h1[0][l] - h1[1][l];
    out.Jzeta[1][l] = h1[0][l] - hk[0][l];
    out.Jzeta[2][l] = h1[2][l] - hk[1][l];
  }
  DenseMatrix js(3, std::vector<double>(3));
  for (int r = 0; r < 3; ++r)
    for (int q = 0; q < 3; ++q) js[r][q] = out.Jzeta[r][q + 1];
  out.det_jstar = determinant(js);
  if (out.det_jstar == 0) throw Error(ErrorCode::SingularJStar, "J* is singular");
  // Affine relations: xi1' = c_1 - (k-2) xi2' - xi4', xi5' = c_k - (k-1) xi3'; substitute and solve for xi2', xi3', xi4'.
  const double cc1 = out.column_derivative[0], cck = out.column_derivative[1];
  DenseMatrix m(3, std::vector<double>(3));
  std::vector<double> rhs(3);
  for (int r = 0; r < 3; ++r) {
    const Lin5& j = out.Jzeta[r];
    m[r][0] = j[1] - (k - 2) * j[0];
    m[r][1] = j[2] - (k - 1) * j[4];
    m[r][2] = j[3] - j[0];
    rhs[r] = -j[0] * cc1 - j[4] * cck;
  }
  std::vector<double> y;
  try {
    y = solve_linear(m, rhs);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularJStar, "reduced derivative system is singular");
  }
  out.xi_prime = {cc1 - (k - 2) * y[0] - y[2], y[0], y[1], y[2], cck - (k - 1) * y[1]};
  return out;
}

Coords derivative_fd_oracle(const Chart& c, const Coords& xi0, double k, double delta, const NewtonConfig& cfg) {
  if (!(delta >= 1e-5 && delta <= 1e-2)) throw Error(ErrorCode::BadInput, "delta must lie in [1e-5, 1e-2]");
  const Coords x = lambda_step_solve(c, xi0, k, delta, cfg).x;
  Coords d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = (x[i] - xi0[i]) / delta;
  return d;
}

std::string path_csv(const std::vector<PathSample>& samples) {
  std::ostringstream os;
  const std::size_t m = samples.empty() ? 0 : samples.front().xi.size();
  os << "lambda";
  for (std::size_t i = 1; i <= m; ++i) os << ",xi_" << i;
  os << ",residual_norm\n";
  for (const auto& s : samples) {
    os << fmt17(s.lambda);
    for (double x : s.xi) os << ',' << fmt17(x);
    os << ',' << fmt17(s.residual_norm) << '\n';
  }
  return os.str();
}

}  // namespace relucrit
