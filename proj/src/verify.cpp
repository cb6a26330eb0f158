#include "relucrit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "relucrit/consistency.hpp"
#include "relucrit/continuation.hpp"
#include "relucrit/error.hpp"
#include "relucrit/kernel.hpp"
#include "relucrit/objective.hpp"
#include "relucrit/series.hpp"

namespace relucrit {

using std::numbers::pi;

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"kernel", "symmetry", "objective", "consistency", "continuation", "series"};
  return s;
}

namespace {

using Rng = std::mt19937_64;

struct Ctx {
  std::vector<CheckResult>* out;
  std::string suite;
  std::vector<SeedRecord> seeds;

  void check(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult r{suite, name, false, ""};
    try {
      bool ok = true;
      r.detail = body(ok);
      r.passed = ok;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    out->push_back(std::move(r));
  }
};

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

double rel_err(double a, double b, double floor = 1) { return std::abs(a - b) / std::max(floor, std::abs(b)); }

WeightMatrix random_matrix(Rng& g, std::size_t k, double scale = 1) {
  std::normal_distribution<double> n(0, scale);
  WeightMatrix w(k, k);
  for (double& x : w.data()) x = n(g);
  return w;
}

Permutation random_perm(Rng& g, std::size_t k) {
  Permutation p(k);
  for (std::size_t i = 0; i < k; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), g);
  return p;
}

Chart random_chart(Rng& g) {
  switch (std::uniform_int_distribution<int>(0, 2)(g)) {
    case 0: return Chart::delta_sk();
    case 1: return Chart::delta_sk1();
    default: return Chart::delta_block(2);
  }
}

Coords random_coords(Rng& g, const Chart& c) {
  std::uniform_real_distribution<double> u(-1, 1);
  Coords x(c.m);
  for (double& v : x) v = u(g);
  return x;
}

void kernel_suite(Ctx& c) {
  c.check("mc_oracle", [](bool& ok) {
    Rng g(11);
    double worst = 0;
    for (int t = 0; t < 3; ++t)
      for (double lam : {1.0, 0.5, 0.2}) {
        const WeightMatrix w = random_matrix(g, 2, 1);
        const McEstimate e = mc_kernel_estimate(w.row(0), w.row(1), lam, 200000, 1000 + t);
        worst = std::max(worst, std::abs(e.mean - kernel_f_lambda(w.row(0), w.row(1), lam)) / e.stderr_);
      }
    ok = worst <= 3;
    return "max |mc - closed| / stderr = " + sci(worst);
  });
  c.check("gradient_fd", [](bool& ok) {
    Rng g(12);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
      const WeightMatrix w = random_matrix(g, 2, 1);
      const double lam = std::uniform_real_distribution<double>(0, 1)(g);
      const Vec gr = kernel_grad_lambda(w.row(0), w.row(1), lam);
      for (int i = 0; i < 2; ++i) {
        Vec p(w.row(0).begin(), w.row(0).end()), m = p;
        const double h = 1e-6;
        p[i] += h;
        m[i] -= h;
        const double fd = (kernel_f_lambda(p, w.row(1), lam) - kernel_f_lambda(m, w.row(1), lam)) / (2 * h);
        worst = std::max(worst, rel_err(gr[i], fd, 1e-3));
      }
    }
    ok = worst <= 1e-6;
    return "max relative error " + sci(worst);
  });
  c.check("symmetry_homogeneity", [](bool& ok) {
    Rng g(13);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
      const WeightMatrix w = random_matrix(g, 2, 1);
      const double lam = std::uniform_real_distribution<double>(0, 1)(g);
      const double f = kernel_f_lambda(w.row(0), w.row(1), lam);
      worst = std::max(worst, rel_err(f, kernel_f_lambda(w.row(1), w.row(0), lam)));
      Vec s(w.row(0).begin(), w.row(0).end());
      for (double& x : s) x *= 2.5;
      worst = std::max(worst, rel_err(kernel_f_lambda(s, w.row(1), lam), 2.5 * f));
    }
    ok = worst <= 1e-14;
    return "max deviation " + sci(worst);
  });
  c.check("lambda_zero_linear", [](bool& ok) {
    Rng g(14);
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
      const WeightMatrix w = random_matrix(g, 3, 1);
      worst = std::max(worst, std::abs(kernel_f_lambda(w.row(0), w.row(1), 0) - dot(w.row(0), w.row(1)) / 2));
    }
    ok = worst <= 1e-15;
    return "max deviation " + sci(worst);
  });
}

void symmetry_suite(Ctx& c) {
  c.check("invariance_equivariance", [](bool& ok) {
    Rng g(21);
    double wf = 0, wg = 0;
    for (int t = 0; t < 20; ++t) {
      const std::size_t k = 3 + t % 5;
      const WeightMatrix w = random_matrix(g, k);
      const Permutation r = random_perm(g, k), e = random_perm(g, k);
      const double lam = std::uniform_real_distribution<double>(0.05, 1)(g);
      const WeightMatrix gw = group_act(r, e, w);
      wf = std::max(wf, rel_err(objective_full(gw, lam), objective_full(w, lam)));
      wg = std::max(wg, (gradient_full(gw, lam) - group_act(r, e, gradient_full(w, lam))).max_abs());
    }
    ok = wf <= 1e-12 && wg <= 1e-12;
    return "objective " + sci(wf) + ", gradient " + sci(wg);
  });
  c.check("fixed_space_gradient", [](bool& ok) {
    Rng g(22);
    double worst = 0;
    bool iso = true;
    for (int t = 0; t < 30; ++t) {
      const Chart ch = random_chart(g);
      const std::size_t k = 5 + t % 6;
      const WeightMatrix w = embed(ch, random_coords(g, ch), k);
      iso = iso && isotropy_contains(w, ch, 1e-14);
      worst = std::max(worst, fixed_space_deviation(ch, gradient_full(w, 1)));
    }
    ok = iso && worst <= 1e-13;
    return std::string(iso ? "isotropy holds" : "isotropy violated") + ", gradient off fixed space by " + sci(worst);
  });
  c.check("isotypic_decomposition", [](bool& ok) {
    Rng g(23);
    double rec = 0, orth = 0, idem = 0, equi = 0;
    for (int t = 0; t < 10; ++t) {
      const std::size_t k = 3 + t;
      const WeightMatrix w = random_matrix(g, k);
      const IsotypicParts p = isotypic_project(w);
      const WeightMatrix parts[4] = {p.part_I, p.part_C1, p.part_R1, p.part_A};
      rec = std::max(rec, (parts[0] + parts[1] + parts[2] + parts[3] - w).max_abs());
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) orth = std::max(orth, std::abs(frobenius_dot(parts[a], parts[b])));
      const IsotypicParts q = isotypic_project(p.part_R1);
      idem = std::max(idem, (q.part_R1 - p.part_R1).max_abs());
      const Permutation r = random_perm(g, k), e = random_perm(g, k);
      equi = std::max(equi, (isotypic_project(group_act(r, e, w)).part_A - group_act(r, e, p.part_A)).max_abs());
    }
    ok = rec <= 1e-12 && orth <= 1e-12 && idem <= 1e-12 && equi <= 1e-12;
    return "reconstruction " + sci(rec) + ", orthogonality " + sci(orth) + ", idempotence " + sci(idem) +
           ", equivariance " + sci(equi);
  });
}

void objective_suite(Ctx& c) {
  c.check("reduced_vs_full", [](bool& ok) {
    Rng g(31);
    double wg = 0, wf = 0;
    for (int t = 0; t < 100; ++t) {
      const Chart ch = random_chart(g);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(std::max(4, ch.p + 2), 16)(g);
      const Coords x = random_coords(g, ch);
      const double lam = std::uniform_real_distribution<double>(0.01, 1)(g);
      const WeightMatrix w = embed(ch, x, k);
      const Coords full = extract(ch, gradient_full(w, lam), 1e-12);
      const Coords red = gradient_reduced(ch, x, double(k), lam);
      double scale = 1;
      for (double v : full) scale = std::max(scale, std::abs(v));
      for (std::size_t i = 0; i < red.size(); ++i) wg = std::max(wg, std::abs(red[i] - full[i]) / scale);
      wf = std::max(wf, rel_err(objective_reduced(ch, x, double(k), lam), objective_full(w, lam)));
    }
    ok = wg <= 1e-12 && wf <= 1e-12;
    return "gradient " + sci(wg) + ", objective " + sci(wf) + " over 100 points, k <= 16";
  });
  c.check("gradient_fd", [](bool& ok) {
    Rng g(32);
    double worst = 0;
    for (int t = 0; t < 5; ++t) {
      const std::size_t k = 3 + t;
      WeightMatrix w = random_matrix(g, k);
      const double lam = std::uniform_real_distribution<double>(0.05, 1)(g);
      const WeightMatrix gr = gradient_full(w, lam);
      double scale = std::max(1.0, gr.max_abs());
      for (std::size_t i = 0; i < w.data().size(); ++i) {
        const double x0 = w.data()[i], h = 1e-6;
        w.data()[i] = x0 + h;
        const double fp = objective_full(w, lam);
        w.data()[i] = x0 - h;
        const double fm = objective_full(w, lam);
        w.data()[i] = x0;
        worst = std::max(worst, std::abs((fp - fm) / (2 * h) - gr.data()[i]) / scale);
      }
    }
    ok = worst <= 1e-6;
    return "max relative error " + sci(worst);
  });
  c.check("lambda_linearity", [](bool& ok) {
    Rng g(33);
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      const WeightMatrix w = random_matrix(g, 4 + t % 3);
      const WeightMatrix s = s_map(w), g0 = gradient_full(w, 0);
      for (double lam : {0.25, 0.5, 0.75}) worst = std::max(worst, (gradient_full(w, lam) - (lam * s + g0)).max_abs());
    }
    ok = worst <= 1e-12;
    return "max deviation " + sci(worst);
  });
  c.check("sigma0_zero_set", [](bool& ok) {
    Rng g(34);
    double on = 0, off = 1e300;
    for (int t = 0; t < 20; ++t) {
      const std::size_t k = 3 + t % 6;
      WeightMatrix w = random_matrix(g, k);
      const auto cs = w.column_sums();
      for (std::size_t j = 0; j < k; ++j) w(k - 1, j) += 1 - cs[j];
      on = std::max(on, gradient_full(w, 0).max_abs());
      w(0, 0) += 0.1;
      const WeightMatrix g0 = gradient_full(w, 0);
      off = std::min(off, g0.max_abs());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (std::abs(g0(i, j) - (j == 0 ? 0.05 : 0.0)) > 1e-12) off = 0;
    }
    ok = on <= 1e-14 && off >= 0.05 - 1e-12;
    return "zero on Sigma_0 to " + sci(on) + ", off-manifold min |grad| " + sci(off);
  });
  c.check("minimal_equations", [](bool& ok) {
    Rng g(35);
    double worst = 0;
    for (int t = 0; t < 40; ++t) {
      const Chart ch = t % 2 ? Chart::delta_sk1() : Chart::delta_sk();
      const double k = 4 + t % 9;
      const Coords x = random_coords(g, ch);
      const Coords a = critical_residual_lambda1(ch, x, k), b = gradient_reduced(ch, x, k, 1);
      for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - 2 * pi * b[i]) / std::max(1.0, std::abs(a[i])));
    }
    ok = worst <= 1e-12;
    return "max deviation from 2 pi * gradient " + sci(worst);
  });
}

void consistency_suite(Ctx& c) {
  c.check("seeds", [&c](bool& ok) {
    if (c.seeds.empty()) throw Error(ErrorCode::BadInput, "no seed records");
    std::ostringstream d;
    for (const auto& s : c.seeds) {
      const Chart ch = chart_for(s.family);
      try {
        const NewtonResult r = solve_consistency(ch, s.k, s.xi);
        d << family_name(s.family) << "@" << s.k << " ok; ";
      } catch (const Error& e) {
        ok = false;
        d << family_name(s.family) << "@" << s.k << " failed: " << e.what() << "; ";
      }
    }
    return d.str();
  });
  c.check("rows_agree", [&c](bool& ok) {
    double rows = 0, cols = 0;
    for (Family f : {Family::A, Family::I, Family::II}) {
      const Coords x = consistency_point(f, 6, c.seeds).xi;
      const WeightMatrix s = s_map(embed(chart_for(f), x, 6));
      for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) rows = std::max(rows, std::abs(s(i, j) - s(0, j)));
      for (double v : embed(chart_for(f), x, 6).column_sums()) cols = std::max(cols, std::abs(v - 1));
    }
    ok = rows <= 1e-10 && cols <= 1e-12;
    return "S rows differ by " + sci(rows) + ", column sums off by " + sci(cols);
  });
  c.check("closed_p0_agrees", [](bool& ok) {
    int mismatches = 0, points = 0;
    for (double k : {4.0, 6.0, 10.0})
      for (int i = 0; i <= 250; ++i) {
        const double rho = -2 + 2.5 * i / 250.0;
        const Coords x{1 + rho, -rho / (k - 1)};
        try {
          require_admissible(Chart::delta_sk(), x, k);
        } catch (const Error&) {
          continue;
        }
        const double a = consistency_residual_closed_p0(rho, k);
        const double b = consistency_residual(Chart::delta_sk(), x, k)[0];
        ++points;
        if (std::abs(a) > 1e-9 && std::abs(b) > 1e-9 && (a > 0) != (b > 0)) ++mismatches;
      }
    ok = mismatches == 0 && points > 600;
    return std::to_string(mismatches) + " sign mismatches over " + std::to_string(points) + " points";
  });
  c.check("k_track_reversible", [&c](bool& ok) {
    const Coords x = consistency_point(Family::II, 6, c.seeds).xi;
    const KTrack up = k_track(chart_for(Family::II), x, 6, 20, 0.5);
    if (up.failed_at >= 0) throw Error(ErrorCode::NoConvergence, up.error);
    const KTrack down = k_track(chart_for(Family::II), up.path.back().second, 20, 6, 0.5);
    if (down.failed_at >= 0) throw Error(ErrorCode::NoConvergence, down.error);
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(down.path.back().second[i] - x[i]));
    ok = d <= 1e-9;
    return "round trip 6 -> 20 -> 6 differs by " + sci(d);
  });
}

Coords richardson_fd(const Chart& ch, const Coords& x, double k) {
  const Coords a = derivative_fd_oracle(ch, x, k, 2e-4), b = derivative_fd_oracle(ch, x, k, 1e-4);
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = 2 * b[i] - a[i];
  return r;
}

double max_rel(const Coords& a, const Coords& b) {
  double s = 0, d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s = std::max(s, std::abs(b[i]));
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d / s;
}

void continuation_suite(Ctx& c) {
  c.check("path_independence", [&c](bool& ok) {
    double worst = 0;
    for (Family f : {Family::A, Family::I, Family::II}) {
      const Coords x = consistency_point(f, 6, c.seeds).xi;
      const Coords j = direct_jump(chart_for(f), x, 6).x;
      const LambdaPath p = lambda_path(chart_for(f), x, 6, 0.01);
      if (!p.complete) throw Error(ErrorCode::NoConvergence, p.error);
      for (std::size_t i = 0; i < j.size(); ++i) worst = std::max(worst, std::abs(j[i] - p.samples.back().xi[i]));
    }
    ok = worst <= 1e-10;
    return "k = 6, lambda_inc 0.01: max endpoint difference " + sci(worst);
  });
  c.check("derivative_p0", [&c](bool& ok) {
    const Coords x = consistency_point(Family::A, 6, c.seeds).xi;
    const double e = max_rel(initial_derivative_p0(x[0] - 1, 6).xi_prime, richardson_fd(Chart::delta_sk(), x, 6));
    ok = e <= 1e-5;
    return "relative difference to finite differences " + sci(e);
  });
  c.check("derivative_p1", [&c](bool& ok) {
    double worst = 0;
    for (Family f : {Family::I, Family::II}) {
      const Coords x = consistency_point(f, 6, c.seeds).xi;
      const Coords d = initial_derivative_p1(coords_to_seed(chart_for(f), x), 6).xi_prime;
      worst = std::max(worst, max_rel(d, richardson_fd(chart_for(f), x, 6)));
    }
    ok = worst <= 1e-4;
    return "types I and II: relative difference to finite differences " + sci(worst);
  });
}

void series_suite(Ctx& c) {
  c.check("coefficient_decimals", [](bool& ok) {
    const SeriesModel m = series_model(Family::II);
    const double d[3] = {m.coefficient(0, 5) + 3.013, m.coefficient(4, 3) + 1.699, m.coefficient(1, 5) + 1.032};
    ok = std::abs(d[0]) <= 1e-3 && std::abs(d[1]) <= 1e-3 && std::abs(d[2]) <= 1e-3;
    return "c5, d3, e5 offsets " + sci(d[0]) + ", " + sci(d[1]) + ", " + sci(d[2]);
  });
  c.check("angle_expansions", [&c](bool& ok) {
    const auto a = asymptotic_angle_check(1e4, c.seeds), b = asymptotic_angle_check(1e3, c.seeds);
    std::ostringstream d;
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double q = a[i].ratio / b[i].ratio;
      worst = std::max(worst, a[i].ratio);
      // the remainder must shrink at the next order: the normalized ratio stays put between k = 1e3 and 1e4
      if (a[i].ratio > 50 || (b[i].ratio > 0.5 && (q < 0.5 || q > 2))) {
        ok = false;
        d << a[i].name << " ratio " << sci(a[i].ratio) << " (k=1e3: " << sci(b[i].ratio) << "); ";
      }
    }
    d << "max normalized remainder " << sci(worst);
    return d.str();
  });
  c.check("theta_scaling", [&c](bool& ok) {
    const auto a = asymptotic_angle_check(1e4, c.seeds), b = asymptotic_angle_check(1e3, c.seeds);
    const double q = std::abs(a[2].computed - pi / 2) / std::abs(b[2].computed - pi / 2);
    ok = std::abs(q / 1e-2 - 1) <= 0.3;
    return "(Theta - pi/2) ratio over a decade " + sci(q) + " (k^-2 predicts 1e-2)";
  });
  c.check("coefficient_fit_typeI", [&c](bool& ok) {
    const auto r = fit_consistency_coefficients(Family::I, 1e3, 1e4,
                                                {{0, 2}, {0, 3}, {2, 2}, {2, 3}, {1, 2}, {1, 3}, {3, 2}, {4, 2}}, c.seeds);
    std::ostringstream d;
    for (const auto& x : r) {
      const bool good = x.model == 0 ? std::abs(x.fitted) <= 0.01 : rel_err(x.fitted, x.model, 0) <= 0.01;
      ok = ok && good;
      d << "xi" << x.coord + 1 << "/n" << x.n << "=" << sci(x.fitted) << (good ? " " : "(bad) ");
    }
    return d.str();
  });
  c.check("norm_asymptotics", [&c](bool& ok) {
    std::ostringstream d;
    for (Family f : {Family::A, Family::I, Family::II}) {
      const double k = 1e4;
      const Coords x = direct_jump(chart_for(f), consistency_point(f, k, c.seeds).xi, k).x;
      // |W|^2 from the distinct entries and their multiplicities
      const Coords mult = multiplicities(chart_for(f), k);
      double n2 = 0;
      for (std::size_t i = 0; i < x.size(); ++i) n2 += mult[i] * x[i] * x[i];
      const double a = k * (std::sqrt(n2 / k) - 1);
      ok = ok && std::abs(a) <= 0.01;
      d << family_name(f) << ": a = " << sci(a) << "; ";
    }
    return d.str();
  });
  c.check("target_convergence_typeII", [&c](bool& ok) {
    double prev_i = 1e300, prev_k = 1e300;
    std::ostringstream d;
    for (double k : {1e2, 1e3, 1e4}) {
      const Coords x = direct_jump(chart_for(Family::II), consistency_point(Family::II, k, c.seeds).xi, k).x;
      const double di = std::sqrt((x[0] - 1) * (x[0] - 1) + (k - 2) * x[1] * x[1] + x[2] * x[2]);
      const double dk = std::sqrt((k - 1) * x[3] * x[3] + (x[4] + 1) * (x[4] + 1));
      ok = ok && di < prev_i && dk < prev_k;
      prev_i = di;
      prev_k = dk;
      d << "k=" << k << ": " << sci(di) << ", " << sci(dk) << "; ";
    }
    return d.str();
  });
  c.check("decay_typeII_monotone", [&c](bool& ok) {
    const auto s = decay_scan(Family::II, {1e2, 1e3, 1e4}, c.seeds);
    const double lim = 0.5 - 2 / (pi * pi);
    ok = std::abs(s[1].normalized - lim) < std::abs(s[0].normalized - lim) &&
         std::abs(s[2].normalized - lim) < std::abs(s[1].normalized - lim) && std::abs(s[2].normalized - lim) <= 0.01;
    return "kF = " + sci(s[0].normalized) + ", " + sci(s[1].normalized) + ", " + sci(s[2].normalized);
  });
  c.check("closed_form_points", [](bool& ok) {
    double z = 0, rr = 0;
    for (int k = 3; k <= 8; ++k) {
      const GammaPoints p = closed_form_gamma_points(k);
      z = std::max({z, gradient_full(WeightMatrix(k, k, p.z), 1).max_abs(), std::abs(psi_k_scaled(p.y, k))});
    }
    for (int k = 2; k <= 6; ++k) {
      const ReversedRowPoint p = reversed_row_point(k);
      rr = std::max({rr, std::abs(p.residual_first), std::abs(p.residual_rest), gradient_full(p.w, 1).max_abs()});
    }
    ok = z <= 1e-10 && rr <= 1e-10;
    return "z_k gradient " + sci(z) + ", reversed-row residual " + sci(rr);
  });
}

}  // namespace

std::vector<CheckResult> run_verify(const std::string& only, const std::string& seed_path) {
  if (!only.empty() && std::find(verify_suites().begin(), verify_suites().end(), only) == verify_suites().end())
    throw Error(ErrorCode::BadInput, "unknown suite '" + only + "'");
  std::vector<CheckResult> out;
  Ctx c{&out, "", {}};
  try {
    c.seeds = seed_path.empty() ? default_seeds() : load_seed_file(seed_path);
  } catch (const Error& e) {
    out.push_back({"consistency", "seeds", false, e.what()});
    return out;
  }
  const std::pair<const char*, void (*)(Ctx&)> suites[] = {
      {"kernel", kernel_suite},           {"symmetry", symmetry_suite},         {"objective", objective_suite},
      {"consistency", consistency_suite}, {"continuation", continuation_suite}, {"series", series_suite}};
  for (const auto& [name, fn] : suites) {
    if (!only.empty() && only != name) continue;
    c.suite = name;
    fn(c);
  }
  return out;
}

std::string verify_ledger(const std::vector<CheckResult>& r) {
  std::ostringstream os;
  for (const auto& c : r) os << (c.passed ? "PASS " : "FAIL ") << c.suite << '.' << c.name << ": " << c.detail << '\n';
  return os.str();
}

}  // namespace relucrit
