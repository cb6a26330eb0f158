// Acceptance runner: one PASS/FAIL line per criterion. `--only N` runs a single criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "relucrit/consistency.hpp"
#include "relucrit/continuation.hpp"
#include "relucrit/families.hpp"
#include "relucrit/objective.hpp"
#include "relucrit/series.hpp"
#include "relucrit/verify.hpp"

using namespace relucrit;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", x);
  return b;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// A published quantity: offset + shown, where `shown` carries the printed significant digits.
struct Printed {
  double offset, shown;
};

// Criterion 1 needs 7 significant digits of the printed part.
bool sig7(double value, Printed p) {
  const double d = value - p.offset;
  return std::abs(d - p.shown) <= 5e-7 * std::abs(p.shown);
}

Outcome c1(const std::vector<SeedRecord>& seeds) {
  struct Row {
    Family f;
    double k;
    Printed v[3];  // 1 + rho, 1 + nu, eps
  };
  const Row rows[] = {
      {Family::A, 6, {{0, -0.66063967}, {0, -0.66063967}, {0, 0.33212793}}},
      {Family::I, 6, {{0, -0.58622786}, {0, 1.067795110115}, {0, 0.39200518}}},
      {Family::II, 6, {{0, 0.98254382}, {0, -0.58566032}, {0, -0.054141651}}},
      {Family::A, 1000, {{0, -0.99799996}, {0, -0.99799996}, {0, 1.99999996e-3}}},
      {Family::I, 1000, {{0, -0.99799546}, {1, 1.591580519e-3}, {0, 2.00334518e-3}}},
      {Family::II, 1000, {{1, 2.43361217e-6}, {0, -0.9947270019}, {0, -1.305602504e-6}}},
  };
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{true, ""};
  std::string bad;
  for (const Row& r : rows) {
    const PointSolution s = consistency_point(r.f, r.k, seeds);
    const ConsistencySeed t = coords_to_seed(chart_for(r.f), s.xi);
    double got[3];
    if (r.f == Family::A) {
      got[0] = got[1] = 1 + t.values[0];
      got[2] = s.xi[1];
    } else {
      got[0] = 1 + t.values[0];
      got[1] = 1 + t.values[1];
      got[2] = t.values[2];
    }
    for (int i = 0; i < 3; ++i)
      if (!sig7(got[i], r.v[i])) {
        o.pass = false;
        std::ostringstream m;
        m.precision(10);
        m << " " << family_name(r.f) << "/k=" << r.k << "/col" << i << " got " << got[i] << " want "
          << r.v[i].offset + r.v[i].shown << ";";
        bad += m.str();
      }
  }
  const double dt = seconds_since(t0);
  if (dt >= 5) o.pass = false;
  o.detail = "runtime " + sci(dt) + " s;" + (bad.empty() ? " all 18 values match" : bad);
  return o;
}

Outcome c2(const std::vector<SeedRecord>& seeds) {
  struct Row {
    Family f;
    double xi[5];
    double ulp[5];  // half a unit in the last printed digit
  };
  const Row rows[] = {
      {Family::A, {-0.663397, 0.330710, 0.330710, 0.330710, -0.663397}, {5e-7, 5e-7, 5e-7, 5e-7, 5e-7}},
      {Family::I, {-0.587730, 0.391154, -0.0137989, 0.0167703, 1.0683956}, {5e-7, 5e-7, 5e-8, 5e-8, 5e-8}},
      {Family::II, {0.986704, -0.0504134, 0.308001, 0.224516, -0.601512}, {5e-7, 5e-8, 5e-7, 5e-7, 5e-7}},
  };
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{true, ""};
  double gmax = 0;
  for (const Row& r : rows) {
    const Chart ch = chart_for(r.f);
    const PointSolution s = consistency_point(r.f, 6, seeds);
    Coords x = direct_jump(ch, s.xi, 6).x;
    gmax = std::max(gmax, inf_norm(gradient_reduced(ch, x, 6, 1)));
    if (r.f == Family::A) x = sk_to_sk1(x);
    for (int i = 0; i < 5; ++i)
      if (std::abs(x[i] - r.xi[i]) > r.ulp[i]) {
        o.pass = false;
        o.detail += " " + family_name(r.f) + " xi" + std::to_string(i + 1) + " off by " + sci(x[i] - r.xi[i]) + ";";
      }
  }
  const double dt = seconds_since(t0);
  if (gmax > 1e-12 || dt >= 5) o.pass = false;
  o.detail = "gradient inf-norm " + sci(gmax) + ", runtime " + sci(dt) + " s;" +
             (o.detail.empty() ? " all printed digits match" : o.detail);
  return o;
}

Outcome c3(const std::vector<SeedRecord>& seeds) {
  double worst = 0;
  for (Family f : {Family::A, Family::I, Family::II})
    for (double k : {6.0, 10.0, 20.0}) {
      const Chart ch = chart_for(f);
      const Coords x = consistency_point(f, k, seeds).xi;
      const Coords j = direct_jump(ch, x, k).x;
      const LambdaPath p = lambda_path(ch, x, k, 0.01);
      if (!p.complete) return {false, family_name(f) + " k=" + sci(k) + ": path incomplete: " + p.error};
      for (std::size_t i = 0; i < j.size(); ++i) worst = std::max(worst, std::abs(j[i] - p.samples.back().xi[i]));
    }
  return {worst <= 1e-10, "max endpoint difference " + sci(worst) + " over 9 cases"};
}

Outcome c4(const std::vector<SeedRecord>& seeds) {
  struct Quoted {
    Family f;
    const char* row;
    std::vector<double> err;
  };
  const std::vector<Quoted> q = {
      {Family::A, "a", {2e-8, 7e-9}},
      {Family::A, "a+", {6.5e-10, 2.6e-10}},
      {Family::A, "s", {2e-10, 7e-9}},
      {Family::I, "a", {4.5e-12, 4.1e-12, 2.7e-12, 2.8e-8, 5.8e-8}},
      {Family::I, "s", {1.4e-8, 7.0e-9, 4.4e-9, 2e-9, 2.3e-9}},
      {Family::II, "a", {2e-11, 1e-12, 4.19e-8, 5e-8, 3e-7}},
      {Family::II, "s", {1e-12, 8e-13, 4.19e-8, 7e-9, 5e-8}},
  };
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{true, ""};
  int n = 0;
  for (Family f : {Family::A, Family::I, Family::II}) {
    const Comparison cmp = compare_approximations(f, 1e4, seeds);
    for (const Quoted& e : q) {
      if (e.f != f) continue;
      const ComparisonRow& r = cmp.row(e.row);
      for (std::size_t i = 0; i < e.err.size(); ++i, ++n) {
        const double ratio = r.abs_error[i] / e.err[i];
        if (!(ratio <= 3 && ratio >= 1.0 / 3)) {
          o.pass = false;
          o.detail += " " + family_name(f) + " |c^" + e.row + "_" + std::to_string(i + 1) + " - c| = " +
                      sci(r.abs_error[i]) + " vs quoted " + sci(e.err[i]) + ";";
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 30) o.pass = false;
  o.detail = std::to_string(n) + " entries, runtime " + sci(dt) + " s;" +
             (o.detail.empty() ? " all within a factor of 3" : " outside factor 3:" + o.detail);
  return o;
}

Outcome c5(const std::vector<SeedRecord>& seeds) {
  const double k = 1e4, pi = 3.14159265358979323846;
  const double a = decay_scan(Family::A, {k}, seeds)[0].F;
  const double i = decay_scan(Family::I, {k}, seeds)[0].F;
  const double ii = decay_scan(Family::II, {k}, seeds)[0].normalized;
  const double m = decay_scan(Family::M, {k}, seeds)[0].F;
  const bool ok = std::abs(ii - (0.5 - 2 / (pi * pi))) <= 0.01 && std::abs(a - (0.5 - 1 / pi)) <= 0.01 &&
                  std::abs(i - (0.5 - 1 / pi)) <= 0.01 && std::abs(m / 5.922e-5 - 1) <= 0.02 && k * m >= 0.55 &&
                  k * m <= 0.65;
  return {ok, "kF(II) " + sci(ii) + ", F(A) " + sci(a) + ", F(I) " + sci(i) + ", F(M) " + sci(m) + ", kF(M) " +
                  sci(k * m)};
}

Outcome c6() {
  const SeriesModel m = series_model(Family::II);
  const double c5 = m.coefficient(0, 5), d3 = m.coefficient(4, 3), e5 = m.coefficient(1, 5);
  const bool ok = std::abs(c5 + 3.013) <= 1e-3 && std::abs(d3 + 1.699) <= 1e-3 && std::abs(e5 + 1.032) <= 1e-3;
  return {ok, "c5 " + sci(c5) + ", d3 " + sci(d3) + ", e5 " + sci(e5)};
}

Outcome c7(const std::vector<SeedRecord>& seeds) {
  const Coords xa = consistency_point(Family::A, 6, seeds).xi;
  const P0Derivative d0 = initial_derivative_p0(xa[0] - 1, 6);
  const bool a_ok = std::abs(d0.A1_printed - 4.9889) <= 1e-3 && std::abs(d0.A2_printed + 9.7101) <= 1e-3;
  const double e0 = std::max(std::abs(d0.xi_prime[0] + 1.68903e-3), std::abs(d0.xi_prime[1] + 8.67792e-4));

  const Chart ch = chart_for(Family::II);
  const Coords x2 = consistency_point(Family::II, 6, seeds).xi;
  const Coords d1 = initial_derivative_p1(coords_to_seed(ch, x2), 6).xi_prime;
  const Coords fa = derivative_fd_oracle(ch, x2, 6, 2e-4), fb = derivative_fd_oracle(ch, x2, 6, 1e-4);
  double mx = 0, scale = 0, diff = 0;
  for (std::size_t i = 0; i < d1.size(); ++i) {
    const double fd = 2 * fb[i] - fa[i];
    mx = std::max(mx, std::abs(d1[i]));
    scale = std::max(scale, std::abs(fd));
    diff = std::max(diff, std::abs(d1[i] - fd));
  }
  const bool ok = a_ok && e0 <= 1e-6 && mx < 4.1e-3 && diff <= 1e-4 * scale;
  return {ok, "A1 " + sci(d0.A1_printed) + ", A2 " + sci(d0.A2_printed) + ", xi' offset " + sci(e0) +
                  "; type II max|xi'| " + sci(mx) + ", relative gap to finite differences " + sci(diff / scale)};
}

Outcome c8() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_verify("");
  const double dt = seconds_since(t0);
  std::string failed;
  for (const auto& c : r)
    if (!c.passed) failed += " " + c.suite + "." + c.name;
  const bool ok = failed.empty() && dt < 120;
  return {ok, std::to_string(r.size()) + " checks, runtime " + sci(dt) + " s" +
                  (failed.empty() ? "" : "; failed:" + failed)};
}

Outcome c9() {
  double z = 0, rr = 0;
  for (int k = 3; k <= 8; ++k) {
    const GammaPoints p = closed_form_gamma_points(k);
    z = std::max(z, gradient_full(WeightMatrix(k, k, p.z), 1).frobenius());
  }
  for (int k = 2; k <= 6; ++k) {
    const ReversedRowPoint p = reversed_row_point(k);
    rr = std::max({rr, std::abs(p.residual_first), std::abs(p.residual_rest)});
  }
  return {z <= 1e-10 && rr <= 1e-10, "z_k gradient norm " + sci(z) + ", reversed-row residual " + sci(rr)};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) only = std::atoi(argv[++i]);
  const std::vector<SeedRecord> seeds = default_seeds();
  const std::vector<std::function<Outcome()>> crit = {
      [&] { return c1(seeds); }, [&] { return c2(seeds); }, [&] { return c3(seeds); },
      [&] { return c4(seeds); }, [&] { return c5(seeds); }, [] { return c6(); },
      [&] { return c7(seeds); }, [] { return c8(); },        [] { return c9(); },
  };
  bool all = true;
  for (int i = 1; i <= 9; ++i) {
    if (only && i != only) continue;
    Outcome o;
    try {
      o = crit[i - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s\n", i, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
