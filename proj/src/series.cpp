#include "relucrit/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "relucrit/consistency.hpp"
#include "relucrit/continuation.hpp"
#include "relucrit/error.hpp"
#include "relucrit/objective.hpp"

namespace relucrit {

using std::numbers::pi;

double SeriesModel::coefficient(std::size_t coord, int n) const {
  for (const auto& t : coords.at(coord).terms)
    if (t.n == n) return t.value;
  return 0;
}

namespace {

SeriesCoordinate coord(double c0, std::vector<SeriesTerm> t) { return {c0, std::move(t)}; }

SeriesModel model_II() {
  const double p3 = pi * pi * pi, p4 = p3 * pi;
  return {Family::II,
          {coord(1, {{4, 8 / pi}, {5, -320 * pi / (3 * p4 * (pi - 2))}}),
           coord(0, {{4, -4 / pi}, {5, -32 / p3}}),
           coord(0, {{2, 2}, {3, 0}}),
           coord(0, {{2, 4 / pi}, {3, 32 / p3}}),
           coord(-1, {{2, 2 + 8 * (pi + 1) / (pi * pi)}, {3, (64 * pi - 768) / (3 * p4 * (pi - 2))}})}};
}

SeriesModel model_A() {
  return {Family::A, {coord(-1, {{2, 2}, {3, 0}, {4, 8 / pi - 4}}), coord(0, {{2, 2}, {3, 0}, {4, 4 / pi - 2}})}};
}

SeriesModel model_I() {
  const double p2 = pi * pi;
  return {Family::I,
          {coord(-1, {{2, 2}, {3, 0}, {4, 16 / pi - 4}, {5, 4.441691, true}}),
           coord(0, {{2, 2}, {3, 0}, {4, 8 / pi - 2}, {5, 8 * (p2 + 4 * (pi - 1)) / (p2 * pi)}}),
           coord(0, {{2, 0}, {3, 0}, {4, 16 / p2 - 12 / pi}, {5, 6.205827, true}}),
           coord(0, {{2, 2 - 4 / pi}, {3, 32 / p2 * (1 / pi - 1)}}),
           coord(1, {{2, 8 * (pi - 1) / p2}, {3, -4.798751, true}})}};
}

}  // namespace

SeriesModel series_model(Family f) {
  switch (f) {
    case Family::A: return model_A();
    case Family::I: return model_I();
    case Family::II: return model_II();
    default: throw Error(ErrorCode::UnknownFamily, "no series model for family " + family_name(f));
  }
}

Coords series_eval(Family f, double k, SeriesVariant v) {
  if (!(k >= 3)) throw Error(ErrorCode::DomainError, "series evaluation needs k >= 3");
  const SeriesModel m = series_model(f);
  const std::size_t keep = v == SeriesVariant::Truncated3 ? 2 : v == SeriesVariant::Truncated4 ? 3 : SIZE_MAX;
  Coords out;
  for (const auto& c : m.coords) {
    double x = 0;
    // smallest terms first
    const std::size_t used = std::min(keep, c.terms.size());
    for (std::size_t i = used; i-- > 0;) x += c.terms[i].value * std::pow(k, -c.terms[i].n / 2.0);
    out.push_back(c.constant + x);
  }
  return out;
}

const ComparisonRow& Comparison::row(const std::string& label) const {
  for (const auto& r : rows)
    if (r.label == label) return r;
  throw Error(ErrorCode::BadInput, "no comparison row " + label);
}

Comparison compare_approximations(Family f, double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  const Chart c = chart_for(f);
  const PointSolution s = consistency_point(f, k, seeds, cfg);
  const Coords solved = direct_jump(c, s.xi, k, cfg).x;
  Comparison out;
  out.family = f;
  out.k = k;
  auto add = [&](const std::string& label, const Coords& v) {
    ComparisonRow r{label, v, {}};
    for (std::size_t i = 0; i < v.size(); ++i) r.abs_error.push_back(std::abs(v[i] - solved[i]));
    out.rows.push_back(std::move(r));
  };
  // the published type I comparison uses every printed term
  add("a", series_eval(f, k, f == Family::I ? SeriesVariant::All : SeriesVariant::Truncated3));
  if (f == Family::A) add("a+", series_eval(f, k, SeriesVariant::Truncated4));
  add("s", s.xi);
  out.rows.push_back({"solved", solved, {}});
  return out;
}

std::vector<double> geometric_grid(double k_min, double k_max, double factor) {
  if (!(k_min >= 3) || !(k_max >= k_min) || !(factor > 1)) throw Error(ErrorCode::BadInput, "invalid k range");
  std::vector<double> ks;
  for (double k = k_min; k < k_max * (1 - 1e-12); k *= factor) ks.push_back(std::round(k));
  ks.push_back(k_max);
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

std::vector<DecaySample> decay_scan(Family f, const std::vector<double>& ks, const std::vector<SeedRecord>& seeds,
                                    const NewtonConfig& cfg) {
  const Chart c = chart_for(f);
  std::vector<DecaySample> out;
  for (double k : ks) {
    const PointSolution s = consistency_point(f, k, seeds, cfg);
    const Coords x = direct_jump(c, s.xi, k, cfg).x;
    const double F = objective_reduced(c, x, k, 1);
    const bool per_k = f == Family::II || f == Family::M;
    out.push_back({k, F, per_k ? k * F : F});
  }
  return out;
}

DecayFit fit_decay(const std::vector<DecaySample>& s) {
  if (s.size() < 2) throw Error(ErrorCode::BadInput, "decay fit needs at least two samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& d : s) {
    const double x = 1 / std::sqrt(d.k);
    sx += x;
    sy += d.normalized;
    sxx += x * x;
    sxy += x * d.normalized;
  }
  const double n = double(s.size()), den = n * sxx - sx * sx;
  const double b = (n * sxy - sx * sy) / den;
  return {(sy - b * sx) / n, b};
}

namespace {
double gamma_gap(double k) { return std::sqrt(k - 1) - std::acos(1 / std::sqrt(k)); }
}  // namespace

GammaPoints closed_form_gamma_points(double k) {
  if (!(k >= 2)) throw Error(ErrorCode::DomainError, "k must be >= 2");
  const double g = gamma_gap(k) / pi;
  return {-g / k, (1 + g) / k};
}

double psi_k_scaled(double x, double k, double lam) {
  if (x == 0) throw Error(ErrorCode::ZeroVector, "x = 0 is the zero matrix");
  // Rows are mutually parallel; each target makes angle acos(1/sqrt k) (x > 0) or its supplement.
  const double a = std::acos(1 / std::sqrt(k));
  const double s = std::sqrt(k - 1);
  if (x > 0) return k * x - 1 + lam * (a - s) / pi;
  return k * x - 1 + lam * (s + pi - a) / pi;
}

ZCurve z_curve(double k, double lam) {
  if (!(k >= 1)) throw Error(ErrorCode::DomainError, "k must be >= 1");
  const double g = gamma_gap(k);
  return {1 / k + lam / pi * g, 1 / k + lam * g / (pi * k)};
}

ReversedRowPoint reversed_row_point(int k) {
  if (k < 2) throw Error(ErrorCode::DomainError, "k must be >= 2");
  const double kk = k, a = std::acos(1 / std::sqrt(kk)), s = std::sqrt(kk - 1);
  ReversedRowPoint r;
  r.x = (s + pi - a) / ((kk - 1) * pi);
  r.y = (s - a) / pi;
  r.w = WeightMatrix(k, k);
  for (int j = 0; j < k; ++j) {
    r.w(0, j) = -r.y;
    for (int i = 1; i < k; ++i) r.w(i, j) = r.x;
  }
  const double col = (kk - 1) * r.x - r.y - 1;
  // Row-row angles are pi between the first row and the rest, 0 among the rest; sin vanishes at both.
  // Target angles: pi - a for the first row, a for the others, each with sine sqrt((k-1)/k).
  const double sin_t = std::sqrt((kk - 1) / kk);
  const double first_rows = -(kk - 1) * pi * r.x;
  const double first_targets = kk * sin_t / (r.y * std::sqrt(kk)) * r.y + (pi - a);
  r.residual_first = first_rows + first_targets + pi * col;
  const double rest_rows = pi * r.y;
  const double rest_targets = -kk * sin_t / (r.x * std::sqrt(kk)) * r.x + a;
  r.residual_rest = rest_rows + rest_targets + pi * col;
  return r;
}

std::vector<AngleCheck> asymptotic_angle_check(double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  const SeriesModel m = model_II();
  const double c4 = m.coefficient(0, 4), c5 = m.coefficient(0, 5), e4 = m.coefficient(1, 4), e5 = m.coefficient(1, 5);
  const double d2 = m.coefficient(4, 2), d3 = m.coefficient(4, 3);
  const PointSolution s = consistency_point(Family::II, k, seeds, cfg);
  const ReducedGeometry g = reduced_geometry(Chart::delta_sk1(), s.xi, k);
  const double r = 1 / std::sqrt(k);
  auto pw = [&](double n) { return std::pow(r, n); };
  std::vector<AngleCheck> out;
  auto add = [&](const char* name, double computed, double expansion, double next) {
    const double dev = std::abs(computed - expansion);
    out.push_back({name, computed, expansion, dev, next, dev / next});
  };
  add("tau", g.tau, 1 + (c4 + 2) * pw(4) + c5 * pw(5), pw(6));
  add("tau_k", g.kappa, 1 + (e4 * e4 - 2 * d2) / 2 * pw(2) + (e4 * e5 - d3) * pw(3), pw(4));
  add("Theta_ij", g.Theta, pi / 2 - (2 * e4 + 4) * pw(4) - 2 * e5 * pw(5), pw(6));
  add("Theta_ik", g.Lambda, pi / 2 + (e4 + 2) * pw(2) + e5 * pw(3), pw(4));
  add("alpha_ii", g.alpha_ii, 2 * pw(2) + (e4 * e4 / 4 + 2 - d2) * pw(4), pw(5));
  add("alpha_ij", g.alpha_ij, pi / 2 - e4 * pw(4) - e5 * pw(5), pw(6));
  add("alpha_ik", g.alpha_ik, pi / 2 - 2 * pw(2) - (2 - d2) * pw(4), pw(5));
  add("alpha_kk", g.alpha_kk, pi + e4 * pw(1) + e5 * pw(2), pw(3));
  add("alpha_kj", g.alpha_kj, pi / 2 + e4 * pw(2) + e5 * pw(3), pw(4));
  return out;
}

std::vector<FittedCoefficient> fit_consistency_coefficients(Family f, double k1, double k2,
                                                            const std::vector<std::pair<std::size_t, int>>& wanted,
                                                            const std::vector<SeedRecord>& seeds,
                                                            const NewtonConfig& cfg) {
  const SeriesModel m = series_model(f);
  const Coords x1 = consistency_point(f, k1, seeds, cfg).xi;
  const Coords x2 = consistency_point(f, k2, seeds, cfg).xi;
  const double s1 = 1 / std::sqrt(k1), s2 = 1 / std::sqrt(k2);
  std::vector<FittedCoefficient> out;
  for (auto [ci, n] : wanted) {
    // Remove the constant and the lower-order model terms, scale, and extrapolate linearly in s.
    double u1 = x1.at(ci) - m.coords.at(ci).constant, u2 = x2.at(ci) - m.coords.at(ci).constant;
    for (const auto& t : m.coords.at(ci).terms)
      if (t.n < n) {
        u1 -= t.value * std::pow(s1, t.n);
        u2 -= t.value * std::pow(s2, t.n);
      }
    u1 /= std::pow(s1, n);
    u2 /= std::pow(s2, n);
    const double a = (u2 * s1 - u1 * s2) / (s1 - s2);
    out.push_back({ci, n, a, m.coefficient(ci, n)});
  }
  return out;
}

}  // namespace relucrit
