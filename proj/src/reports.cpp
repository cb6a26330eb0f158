#include "relucrit/reports.hpp"

#include <cmath>
#include <sstream>

#include "relucrit/consistency.hpp"
#include "relucrit/continuation.hpp"
#include "relucrit/error.hpp"
#include "relucrit/format.hpp"
#include "relucrit/objective.hpp"
#include "relucrit/series.hpp"

namespace relucrit {

std::string Table::csv() const {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> n{"inftable1", "inftable4", "compA", "compI", "compII", "typeM"};
  return n;
}

namespace {

std::vector<std::string> xi_header(std::size_t m) {
  std::vector<std::string> h;
  for (std::size_t i = 1; i <= m; ++i) h.push_back("xi_" + std::to_string(i));
  return h;
}

void append(std::vector<std::string>& row, const Coords& v) {
  for (double x : v) row.push_back(fmt17(x));
}

// (1 + rho, 1 + nu, eps); for the DeltaSk chart 1 + nu coincides with 1 + rho.
Coords seed_triple(Family f, const Coords& xi) {
  const ConsistencySeed t = coords_to_seed(chart_for(f), xi);
  if (f == Family::A) return {1 + t.values[0], 1 + t.values[0], xi[1]};
  return {1 + t.values[0], 1 + t.values[1], t.values[2]};
}

Table inftable1(const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  Table t{"inftable1", {"family", "k", "one_plus_rho", "one_plus_nu", "eps"}, {}};
  for (double k : {6.0, 1000.0})
    for (Family f : {Family::A, Family::I, Family::II}) {
      const PointSolution s = consistency_point(f, k, seeds, cfg);
      std::vector<std::string> r{family_name(f), fmt17(k)};
      append(r, seed_triple(f, s.xi));
      t.rows.push_back(std::move(r));
    }
  return t;
}

Table inftable4(const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  Table t{"inftable4", {"family"}, {}};
  for (const auto& h : xi_header(5)) t.header.push_back(h);
  t.header.push_back("gradient_norm");
  for (Family f : {Family::A, Family::I, Family::II}) {
    const Chart c = chart_for(f);
    const PointSolution s = consistency_point(f, 6, seeds, cfg);
    const Coords x = direct_jump(c, s.xi, 6, cfg).x;
    std::vector<std::string> r{family_name(f)};
    append(r, f == Family::A ? sk_to_sk1(x) : x);
    r.push_back(fmt17(gradient_norm_frobenius(c, x, 6, 1)));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table comparison(const std::string& name, Family f, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  const Comparison cmp = compare_approximations(f, 1e4, seeds, cfg);
  Table t{name, {"row"}, {}};
  for (const auto& h : xi_header(cmp.rows.front().values.size())) t.header.push_back(h);
  for (const auto& r : cmp.rows) {
    std::vector<std::string> row{r.label};
    append(row, r.values);
    t.rows.push_back(std::move(row));
  }
  for (const auto& r : cmp.rows) {
    if (r.abs_error.empty()) continue;
    std::vector<std::string> row{"err_" + r.label};
    append(row, r.abs_error);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table type_m(const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  const double k = 1e4;
  const Chart c = chart_for(Family::M);
  const PointSolution s = consistency_point(Family::M, k, seeds, cfg);
  const Coords x = direct_jump(c, s.xi, k, cfg).x;
  Table t{"typeM", {"row"}, {}};
  for (const auto& h : xi_header(6)) t.header.push_back(h);
  t.header.push_back("objective");
  std::vector<std::string> r0{"c0"}, r1{"c"}, r2{"abs_error"};
  append(r0, s.xi);
  r0.push_back(fmt17(objective_reduced(c, s.xi, k, 1)));
  append(r1, x);
  r1.push_back(fmt17(objective_reduced(c, x, k, 1)));
  for (std::size_t i = 0; i < x.size(); ++i) r2.push_back(fmt17(std::abs(x[i] - s.xi[i])));
  r2.push_back("");
  t.rows = {r0, r1, r2};
  return t;
}

}  // namespace

Table build_table(const std::string& name, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  if (name == "inftable1") return inftable1(seeds, cfg);
  if (name == "inftable4") return inftable4(seeds, cfg);
  if (name == "compA") return comparison(name, Family::A, seeds, cfg);
  if (name == "compI") return comparison(name, Family::I, seeds, cfg);
  if (name == "compII") return comparison(name, Family::II, seeds, cfg);
  if (name == "typeM") return type_m(seeds, cfg);
  throw Error(ErrorCode::BadInput, "unknown table '" + name + "'");
}

Table consistency_record(Family f, double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  const Chart c = chart_for(f);
  check_chart_k(c, k);
  const PointSolution s = consistency_point(f, k, seeds, cfg);
  const ConsistencySeed t = coords_to_seed(c, s.xi);
  static const char* names[][4] = {{"rho"}, {"rho", "nu", "eps"}, {"rho", "eps", "eta", "nu"}};
  Table out{"consistency", {"family", "k"}, {}};
  for (std::size_t i = 0; i < t.values.size(); ++i) out.header.push_back(names[c.p][i]);
  for (const auto& h : xi_header(s.xi.size())) out.header.push_back(h);
  out.header.push_back("residual");
  out.header.push_back("iterations");
  std::vector<std::string> r{family_name(f), fmt17(k)};
  append(r, t.values);
  append(r, s.xi);
  r.push_back(fmt17(s.residual));
  r.push_back(std::to_string(s.iterations));
  out.rows.push_back(std::move(r));
  return out;
}

Table critical_record(Family f, double k, Method m, double lam_inc, const std::vector<SeedRecord>& seeds,
                      const NewtonConfig& cfg) {
  const Chart c = chart_for(f);
  check_chart_k(c, k);
  const PointSolution s = consistency_point(f, k, seeds, cfg);
  Coords x;
  int iterations = 0;
  if (m == Method::Jump) {
    const NewtonResult r = direct_jump(c, s.xi, k, cfg);
    x = r.x;
    iterations = r.iterations;
  } else {
    const LambdaPath p = lambda_path(c, s.xi, k, lam_inc, cfg);
    if (!p.complete) throw Error(ErrorCode::NoConvergence, "lambda path stopped: " + p.error);
    x = p.samples.back().xi;
    iterations = int(p.samples.size());
  }
  Table out{"critical", {"family", "k", "method"}, {}};
  for (const auto& h : xi_header(x.size())) out.header.push_back(h);
  for (const char* h : {"gradient_norm", "objective", "steps", "seed_residual"}) out.header.push_back(h);
  std::vector<std::string> r{family_name(f), fmt17(k), m == Method::Jump ? "jump" : "path"};
  append(r, x);
  r.push_back(fmt17(gradient_norm_frobenius(c, x, k, 1)));
  r.push_back(fmt17(objective_reduced(c, x, k, 1)));
  r.push_back(std::to_string(iterations));
  r.push_back(fmt17(s.residual));
  out.rows.push_back(std::move(r));
  return out;
}

Table decay_table(Family f, double k_min, double k_max, double factor, const std::vector<SeedRecord>& seeds,
                  const NewtonConfig& cfg) {
  const std::vector<DecaySample> s = decay_scan(f, geometric_grid(k_min, k_max, factor), seeds, cfg);
  Table t{"decay", {"kind", "k", "F", "normalized"}, {}};
  for (const auto& d : s) t.rows.push_back({"sample", fmt17(d.k), fmt17(d.F), fmt17(d.normalized)});
  if (s.size() >= 2) t.rows.push_back({"fit", "", "", fmt17(fit_decay(s).constant)});
  return t;
}

}  // namespace relucrit
