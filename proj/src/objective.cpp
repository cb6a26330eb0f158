#include "relucrit/objective.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "relucrit/error.hpp"
#include "relucrit/kernel.hpp"

namespace relucrit {

using std::numbers::pi;

namespace {

void check_full(const WeightMatrix& w) {
  if (w.rows() > kFullSizeLimit) throw Error(ErrorCode::SizeLimit, "full evaluation is capped at k = 512");
  if (w.rows() != w.cols()) throw Error(ErrorCode::DimensionMismatch, "only d = k is supported");
  for (std::size_t i = 0; i < w.rows(); ++i)
    if (norm(w.row(i)) == 0) throw Error(ErrorCode::ZeroVector, "row " + std::to_string(i) + " is zero");
}

double h(double t) { return std::sin(t) - t * std::cos(t); }

struct Cls {
  double cnt, x, y;
};

}  // namespace

double objective_full(const WeightMatrix& w, double lam) {
  check_full(w);
  const std::size_t k = w.rows();
  const WeightMatrix v = WeightMatrix::identity(k);
  double a = 0, b = 0, c = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      a += kernel_f_lambda(w.row(i), w.row(j), lam);
      b += kernel_f_lambda(w.row(i), v.row(j), lam);
      c += kernel_f_lambda(v.row(i), v.row(j), lam);
    }
  return a / 2 - b + c / 2;
}

WeightMatrix gradient_full(const WeightMatrix& w, double lam) {
  check_full(w);
  const std::size_t k = w.rows();
  const std::vector<double> cs = w.column_sums();
  WeightMatrix g(k, k);
  std::vector<double> nrm(k);
  for (std::size_t i = 0; i < k; ++i) nrm[i] = norm(w.row(i));
  for (std::size_t i = 0; i < k; ++i) {
    auto gi = g.row(i);
    double coef = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const double th = angle_between(w.row(i), w.row(j));
      coef += nrm[j] * std::sin(th) / nrm[i];
      for (std::size_t c = 0; c < k; ++c) gi[c] -= th * w(j, c);
    }
    // targets are the unit vectors e_j
    for (std::size_t j = 0; j < k; ++j) {
      double other = 0;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) other += w(i, c) * w(i, c);
      const double al = std::atan2(std::sqrt(other), w(i, j));
      coef -= std::sin(al) / nrm[i];
      gi[j] += al;
    }
    for (std::size_t c = 0; c < k; ++c) gi[c] = lam / (2 * pi) * (gi[c] + coef * w(i, c)) + (cs[c] - 1) / 2;
  }
  return g;
}

BlockGeometry block_geometry(const Chart& c, const Coords& xi, double k) {
  check_coords(c, xi);
  check_chart_k(c, k);
  BlockGeometry g;
  g.D[0] = xi[0];
  g.O[0] = xi[1];
  if (c.p == 0) {
    g.nb = 1;
    g.n[0] = k;
  } else {
    g.nb = 2;
    g.n[0] = k - c.p;
    g.n[1] = c.p;
    g.C[0][1] = xi[2];
    g.C[1][0] = xi[3];
    g.D[1] = xi[4];
    g.off[1] = c.p >= 2;
    if (c.p >= 2) g.O[1] = xi[5];
  }
  const int nb = g.nb;

  auto row_classes = [&](int a) {
    std::vector<Cls> r{{1, g.D[a], 0}, {g.n[a] - 1, g.O[a], 0}};
    for (int b = 0; b < nb; ++b)
      if (b != a) r.push_back({g.n[b], g.C[a][b], 0});
    return r;
  };
  auto target_angle = [](const std::vector<Cls>& r, std::size_t q) {
    double other = 0;
    for (std::size_t i = 0; i < r.size(); ++i) other += (r[i].cnt - (i == q ? 1 : 0)) * r[i].x * r[i].x;
    return std::atan2(std::sqrt(std::max(other, 0.0)), r[q].x);
  };
  auto pair_angle = [](const std::vector<Cls>& r, double ta, double tb) {
    double dm = 0, dp = 0;
    for (const Cls& q : r) {
      const double u = q.x / ta, v = q.y / tb;
      dm += q.cnt * (u - v) * (u - v);
      dp += q.cnt * (u + v) * (u + v);
    }
    return 2 * std::atan2(std::sqrt(std::max(dm, 0.0)), std::sqrt(std::max(dp, 0.0)));
  };

  for (int a = 0; a < nb; ++a) {
    const auto r = row_classes(a);
    double s = 0;
    for (const Cls& q : r) s += q.cnt * q.x * q.x;
    g.tau[a] = std::sqrt(s);
    if (g.tau[a] == 0) throw Error(ErrorCode::ZeroVector, "fixed-space point has zero rows");
    g.a_diag[a] = target_angle(r, 0);
    if (g.off[a]) g.a_off[a] = target_angle(r, 1);
    if (nb == 2) g.a_cross[a] = target_angle(r, 2);
  }
  for (int a = 0; a < nb; ++a) {
    if (!g.off[a]) continue;
    std::vector<Cls> r{{1, g.D[a], g.O[a]}, {1, g.O[a], g.D[a]}, {g.n[a] - 2, g.O[a], g.O[a]}};
    for (int b = 0; b < nb; ++b)
      if (b != a) r.push_back({g.n[b], g.C[a][b], g.C[a][b]});
    g.theta_same[a] = pair_angle(r, g.tau[a], g.tau[a]);
  }
  if (nb == 2) {
    std::vector<Cls> r{{1, g.D[0], g.C[1][0]},
                       {g.n[0] - 1, g.O[0], g.C[1][0]},
                       {1, g.C[0][1], g.D[1]},
                       {g.n[1] - 1, g.C[0][1], g.O[1]}};
    g.theta_cross = pair_angle(r, g.tau[0], g.tau[1]);
  }
  const auto cs = column_sums(c, xi, k);
  for (int a = 0; a < nb; ++a) g.colsum[a] = cs[a];
  return g;
}

double min_parallel_margin(const BlockGeometry& g) {
  double m = pi;
  auto upd = [&m](double t) { m = std::min({m, t, pi - t}); };
  for (int a = 0; a < g.nb; ++a) {
    upd(g.a_diag[a]);
    if (g.off[a]) {
      upd(g.a_off[a]);
      upd(g.theta_same[a]);
    }
    if (g.nb == 2) upd(g.a_cross[a]);
  }
  if (g.nb == 2) upd(g.theta_cross);
  return m;
}

ReducedGeometry reduced_geometry(const Chart& c, const Coords& xi, double k, bool require_admissible) {
  const BlockGeometry g = block_geometry(c, xi, k);
  if (require_admissible && min_parallel_margin(g) < 1e-8)
    throw Error(ErrorCode::NotAdmissible, "rows within 1e-8 rad of parallel");
  ReducedGeometry r;
  r.tau = g.tau[0];
  r.Theta = g.theta_same[0];
  r.alpha_ii = g.a_diag[0];
  r.alpha_ij = g.a_off[0];
  if (g.nb == 2) {
    r.kappa = g.tau[1];
    r.Lambda = g.theta_cross;
    r.alpha_ik = g.a_cross[0];
    r.alpha_kj = g.a_cross[1];
    r.alpha_kk = g.a_diag[1];
  }
  return r;
}

namespace {

// Row block, column block and whether the entry is diagonal, for each distinct entry index.
struct EntryPos {
  int a, g;
  bool diag;
};
constexpr EntryPos kPos[6] = {{0, 0, true}, {0, 0, false}, {0, 1, false}, {1, 0, false}, {1, 1, true}, {1, 1, false}};

}  // namespace

std::vector<double> s_entries(const Chart& c, const Coords& xi, double k) {
  const BlockGeometry g = block_geometry(c, xi, k);
  const int nb = g.nb;
  auto theta = [&](int a, int b) { return a == b ? g.theta_same[a] : g.theta_cross; };
  auto block_colsum = [&](int b, int col) {
    return b == col ? g.D[b] + (g.n[b] - 1) * g.O[b] : g.n[b] * g.C[b][col];
  };
  double P[2] = {0, 0};
  for (int a = 0; a < nb; ++a) {
    double s = 0;
    for (int b = 0; b < nb; ++b) s += (g.n[b] - (b == a ? 1 : 0)) * g.tau[b] / g.tau[a] * std::sin(theta(a, b));
    double t = std::sin(g.a_diag[a]) + (g.n[a] - 1) * std::sin(g.a_off[a]);
    for (int b = 0; b < nb; ++b)
      if (b != a) t += g.n[b] * std::sin(g.a_cross[a]);
    P[a] = s - t / g.tau[a];
  }
  std::vector<double> out(std::size_t(c.m));
  for (int q = 0; q < c.m; ++q) {
    const EntryPos e = kPos[q];
    double x, al;
    if (e.a == e.g) {
      x = e.diag ? g.D[e.a] : g.O[e.a];
      al = e.diag ? g.a_diag[e.a] : g.a_off[e.a];
    } else {
      x = g.C[e.a][e.g];
      al = g.a_cross[e.a];
    }
    double tw = 0;
    for (int b = 0; b < nb; ++b) tw += theta(e.a, b) * (block_colsum(b, e.g) - (b == e.a ? x : 0));
    out[std::size_t(q)] = (P[e.a] * x - tw + al) / (2 * pi);
  }
  return out;
}

std::vector<double> gradient_reduced(const Chart& c, const Coords& xi, double k, double lam) {
  auto s = s_entries(c, xi, k);
  const auto cs = column_sums(c, xi, k);
  for (int q = 0; q < c.m; ++q) s[std::size_t(q)] = lam * s[std::size_t(q)] + (cs[std::size_t(kPos[q].g)] - 1) / 2;
  return s;
}

std::vector<double> multiplicities(const Chart& c, double k) {
  if (c.p == 0) return {k, k * (k - 1)};
  const double p = c.p, n = k - p;
  std::vector<double> m{n, n * (n - 1), n * p, p * n, p};
  if (c.p >= 2) m.push_back(p * (p - 1));
  return m;
}

double gradient_norm_frobenius(const Chart& c, const Coords& xi, double k, double lam) {
  const auto g = gradient_reduced(c, xi, k, lam);
  const auto m = multiplicities(c, k);
  double s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) s += m[i] * g[i] * g[i];
  return std::sqrt(s);
}

std::vector<double> critical_residual_lambda1(const Chart& c, const Coords& xi, double k) {
  if (c.p >= 2) throw Error(ErrorCode::UnsupportedChart, "minimal equations exist for p = 0, 1 only");
  const ReducedGeometry r = reduced_geometry(c, xi, k, false);
  const auto cs = column_sums(c, xi, k);
  if (c.p == 0) {
    const double P = (k - 1) * (std::sin(r.Theta) - std::sin(r.alpha()) / r.tau) - std::sin(r.beta()) / r.tau;
    const double X1 = cs[0] - 1;
    return {P * xi[0] + (pi - r.Theta) * X1 + r.Theta * xi[0] + r.beta() - r.Theta,
            P * xi[1] + (pi - r.Theta) * X1 + r.Theta * xi[1] + r.alpha() - r.Theta};
  }
  const double tau = r.tau, kap = r.kappa, Th = r.Theta, La = r.Lambda;
  const double P = (k - 2) * std::sin(Th) + kap / tau * std::sin(La) -
                   ((k - 2) * std::sin(r.alpha_ij) + std::sin(r.alpha_ik) + std::sin(r.alpha_ii)) / tau;
  const double Q = (k - 1) * tau / kap * std::sin(La) - ((k - 1) * std::sin(r.alpha_kj) + std::sin(r.alpha_kk)) / kap;
  const double X1 = cs[0] - 1, Xk = cs[1] - 1;
  return {P * xi[0] + (pi - Th) * X1 + Th * xi[0] + (Th - La) * xi[3] + r.alpha_ii - Th,
          P * xi[1] + (pi - Th) * X1 + Th * xi[1] + (Th - La) * xi[3] + r.alpha_ij - Th,
          P * xi[2] + (pi - Th) * Xk + Th * xi[2] + (Th - La) * xi[4] + r.alpha_ik - Th,
          Q * xi[3] + (pi - La) * X1 + La * xi[3] + r.alpha_kj - La,
          Q * xi[4] + (pi - La) * Xk + La * xi[4] + r.alpha_kk - La};
}

double objective_reduced(const Chart& c, const Coords& xi, double k, double lam) {
  const BlockGeometry g = block_geometry(c, xi, k);
  const int nb = g.nb;
  // Linear part: sum of the <.,.>/2 terms collapses to |(W - V)^Sigma|^2 / 4.
  double lin = 0;
  for (int a = 0; a < nb; ++a) lin += g.n[a] * (g.colsum[a] - 1) * (g.colsum[a] - 1);
  lin /= 4;
  // Angular part, grouped so that each bracket pairs student-student, student-target and
  // target-target terms sharing a row/column class.
  double ang = 0;
  for (int a = 0; a < nb; ++a) {
    const double ta = g.tau[a];
    ang -= g.n[a] * ta * h(g.a_diag[a]);
    if (g.off[a])
      ang += g.n[a] * (g.n[a] - 1) * (ta * ta * h(g.theta_same[a]) / 2 - ta * h(g.a_off[a]) + 0.5);
    for (int b = 0; b < nb; ++b)
      if (b != a) ang += g.n[a] * g.n[b] * (ta * g.tau[b] * h(g.theta_cross) / 2 - ta * h(g.a_cross[a]) + 0.5);
  }
  return lin + lam / (2 * pi) * ang;
}

StructuredTerms structured_terms(const Coords& xi5, double k) {
  const Chart c = Chart::delta_sk1();
  const ReducedGeometry r = reduced_geometry(c, xi5, k, false);
  StructuredTerms s;
  const double tau = r.tau, kap = r.kappa;
  s.E1 = tau * tau / 4;
  s.E2 = kap * kap / 4;
  s.PsiTheta = psi(r.Theta);
  s.PsiLambda = psi(r.Lambda);
  s.F1 = tau * tau * s.PsiTheta / (2 * pi);
  s.F2 = tau * kap * s.PsiLambda / (2 * pi);
  s.gamma_ii = psi(r.alpha_ii);
  s.gamma_ij = psi(r.alpha_ij);
  s.gamma_ik = psi(r.alpha_ik);
  s.gamma_kk = psi(r.alpha_kk);
  s.gamma_kj = psi(r.alpha_kj);
  s.G_ii = tau / (2 * pi) * s.gamma_ii;
  s.G_ij = tau / (2 * pi) * s.gamma_ij;
  s.G_ik = tau / (2 * pi) * s.gamma_ik;
  s.G_kk = kap / (2 * pi) * s.gamma_kk;
  s.G_kj = kap / (2 * pi) * s.gamma_kj;
  // each unordered pair of rows i, j < k enters once: weight (k-1)(k-2)/2 on F1
  const double ww = (k - 1) * s.E1 + s.E2 + (k - 1) * (k - 2) / 2 * s.F1 + (k - 1) * s.F2;
  const double wv = (k - 1) * s.G_ii + (k - 1) * (k - 2) * s.G_ij + (k - 1) * s.G_ik + s.G_kk + (k - 1) * s.G_kj;
  const double vv = k / 4 + (k * k - k) / (4 * pi);
  s.objective = ww - wv + vv;
  return s;
}

Coords sk_to_sk1(const Coords& xi2) {
  if (xi2.size() != 2) throw Error(ErrorCode::DimensionMismatch, "expected DeltaSk coordinates");
  return {xi2[0], xi2[1], xi2[1], xi2[1], xi2[0]};
}

}  // namespace relucrit
