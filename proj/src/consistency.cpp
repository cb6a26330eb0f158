#include "relucrit/consistency.hpp"

#include <cmath>
#include <numbers>

#include "relucrit/error.hpp"
#include "relucrit/objective.hpp"

namespace relucrit {

using std::numbers::pi;

WeightMatrix s_map(const WeightMatrix& w) {
  if (!in_omega_a(w, WeightMatrix::identity(w.rows())))
    throw Error(ErrorCode::NotAdmissible, "s_map needs W in Omega_a");
  WeightMatrix s = gradient_full(w, 1.0);
  const auto cs = w.column_sums();
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) -= (cs[j] - 1) / 2;
  return s;
}

std::vector<double> consistency_residual(const Chart& c, const Coords& xi, double k) {
  const auto s = s_entries(c, xi, k);
  const auto cs = column_sums(c, xi, k);
  std::vector<double> r;
  // column block 0: D0, O0 and (p >= 1) C10 must agree; column block 1: C01, D1 and (p >= 2) O1
  r.push_back(s[0] - s[1]);
  if (c.p >= 1) {
    r.push_back(s[0] - s[3]);
    r.push_back(s[2] - s[4]);
  }
  if (c.p >= 2) r.push_back(s[4] - s[5]);
  for (double x : cs) r.push_back(x - 1);
  return r;
}

double consistency_residual_closed_p0(double rho, double k) {
  const Coords xi{1 + rho, -rho / (k - 1)};
  if (xi[0] == xi[1]) throw Error(ErrorCode::NotAdmissible, "rows are mutually parallel");
  const ReducedGeometry g = reduced_geometry(Chart::delta_sk(), xi, k, false);
  const double P0 = (k - 1) * (std::sin(g.Theta) - std::sin(g.alpha()) / g.tau) - std::sin(g.beta()) / g.tau;
  return (P0 + g.Theta) * (1 + rho + rho / (k - 1)) + g.beta() - g.alpha();
}

Coords seed_to_coords(const Chart& c, const ConsistencySeed& t, double k) {
  const auto& v = t.values;
  const std::size_t need = c.p == 0 ? 1 : c.p == 1 ? 3 : 4;
  if (v.size() != need) throw Error(ErrorCode::DimensionMismatch, "seed has the wrong number of parameters");
  check_chart_k(c, k);
  if (c.p == 0) return {1 + v[0], -v[0] / (k - 1)};
  if (c.p == 1) {
    const double rho = v[0], nu = v[1], eps = v[2];
    return {1 + rho, eps, -nu / (k - 1), -rho - (k - 2) * eps, 1 + nu};
  }
  const double p = c.p, rho = v[0], eps = v[1], eta = v[2], nu = v[3];
  // xi3, xi4 chosen so that both column sums equal 1
  const double xi3 = (1 - eta - (p - 1) * (1 + nu)) / (k - p);
  const double xi4 = -(rho + (k - p - 1) * eps) / p;
  return {1 + rho, eps, xi3, xi4, eta, 1 + nu};
}

ConsistencySeed coords_to_seed(const Chart& c, const Coords& xi) {
  check_coords(c, xi);
  if (c.p == 0) return {{xi[0] - 1}};
  if (c.p == 1) return {{xi[0] - 1, xi[4] - 1, xi[1]}};
  return {{xi[0] - 1, xi[1], xi[4], xi[5] - 1}};
}

void require_admissible(const Chart& c, const Coords& xi, double k) {
  if (min_parallel_margin(block_geometry(c, xi, k)) < 1e-8)
    throw Error(ErrorCode::NotAdmissible, "configuration within 1e-8 rad of parallel");
}

NewtonResult solve_consistency(const Chart& c, double k, const Coords& seed, const NewtonConfig& cfg) {
  check_coords(c, seed);
  check_chart_k(c, k);
  auto f = [&](const std::vector<double>& x) {
    require_admissible(c, x, k);
    return consistency_residual(c, x, k);
  };
  return newton_solve(f, seed, cfg);
}

namespace {

KTrack track(const Chart& c, const Coords& xi0, const std::vector<double>& ks, const NewtonConfig& cfg) {
  KTrack t;
  Coords x = xi0;
  t.path.emplace_back(ks.front(), x);
  for (std::size_t i = 1; i < ks.size(); ++i) {
    try {
      x = solve_consistency(c, ks[i], x, cfg).x;
    } catch (const Error& e) {
      t.failed_at = int(i);
      t.error = e.what();
      return t;
    }
    t.path.emplace_back(ks[i], x);
  }
  return t;
}

}  // namespace

KTrack k_track(const Chart& c, const Coords& xi0, double k_from, double k_to, double dk, const NewtonConfig& cfg) {
  if (!(dk > 0)) throw Error(ErrorCode::BadInput, "k_track: dk must be positive");
  check_chart_k(c, std::min(k_from, k_to));
  std::vector<double> ks{k_from};
  const double dir = k_to >= k_from ? 1 : -1;
  const long steps = long(std::ceil(std::abs(k_to - k_from) / dk - 1e-9));
  for (long s = 1; s <= steps; ++s) ks.push_back(s == steps ? k_to : k_from + dir * double(s) * dk);
  return track(c, xi0, ks, cfg);
}

KTrack k_track_geometric(const Chart& c, const Coords& xi0, double k_from, double k_to, double ratio,
                         const NewtonConfig& cfg) {
  if (!(ratio > 1)) throw Error(ErrorCode::BadInput, "k_track_geometric: ratio must exceed 1");
  check_chart_k(c, std::min(k_from, k_to));
  std::vector<double> ks{k_from};
  if (k_to > k_from) {
    for (double k = k_from * ratio; k < k_to; k *= ratio) ks.push_back(k);
    ks.push_back(k_to);
  } else if (k_to < k_from) {
    for (double k = k_from / ratio; k > k_to; k /= ratio) ks.push_back(k);
    ks.push_back(k_to);
  }
  return track(c, xi0, ks, cfg);
}

std::vector<double> implied_column_derivative(const Chart& c, const Coords& xi0, double k) {
  const double res = inf_norm(consistency_residual(c, xi0, k));
  if (res > 1e-8) throw Error(ErrorCode::NotConsistent, "consistency residual " + std::to_string(res));
  const auto s = s_entries(c, xi0, k);
  if (c.p == 0) return {-2 * s[0]};
  return {-2 * s[0], -2 * s[2]};
}

}  // namespace relucrit
