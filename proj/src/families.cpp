#include "relucrit/families.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "relucrit/consistency.hpp"
#include "relucrit/error.hpp"

namespace relucrit {

Chart chart_for(Family f) {
  switch (f) {
    case Family::A: return Chart::delta_sk();
    case Family::I:
    case Family::II: return Chart::delta_sk1();
    case Family::M: return Chart::delta_block(2);
  }
  throw Error(ErrorCode::UnknownFamily, "unknown family");
}

Family parse_family(const std::string& s) {
  std::string t;
  for (char ch : s) t += char(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "a") return Family::A;
  if (t == "i") return Family::I;
  if (t == "ii") return Family::II;
  if (t == "m") return Family::M;
  throw Error(ErrorCode::UnknownFamily, "unknown family '" + s + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::M: return "M";
  }
  return "?";
}

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(x))
      throw Error(ErrorCode::BadInput, "bad number '" + item + "'");
    v.push_back(x);
  }
  return v;
}

}  // namespace

std::vector<SeedRecord> parse_seeds(const std::string& text) {
  std::vector<SeedRecord> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok, fam, kk, xi, t;
    bool any = false;
    while (ls >> tok) {
      any = true;
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::BadInput, "seed line " + std::to_string(lineno) + ": expected key=value");
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "family") fam = val;
      else if (key == "k") kk = val;
      else if (key == "xi") xi = val;
      else if (key == "t") t = val;
      else throw Error(ErrorCode::BadInput, "seed line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (!any) continue;
    if (fam.empty() || kk.empty() || (xi.empty() == t.empty()))
      throw Error(ErrorCode::BadInput, "seed line " + std::to_string(lineno) + ": need family, k and one of xi/t");
    SeedRecord r{parse_family(fam), 0, {}};
    const auto kv = parse_list(kk);
    if (kv.size() != 1) throw Error(ErrorCode::BadInput, "seed line " + std::to_string(lineno) + ": bad k");
    r.k = kv[0];
    const Chart c = chart_for(r.family);
    if (!xi.empty()) {
      r.xi = parse_list(xi);
      check_coords(c, r.xi);
    } else {
      r.xi = seed_to_coords(c, {parse_list(t)}, r.k);
    }
    check_chart_k(c, r.k);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SeedRecord> load_seed_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot read seed file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_seeds(ss.str());
}

const std::string& default_seed_text() {
  static const std::string text =
      "family=a k=6 xi=-0.66,0.33\n"
      "family=i k=6 xi=-0.59,0.39,0.01,0.02,1.07\n"
      "family=ii k=6 xi=0.99,-0.05,0.31,0.22,-0.60\n"
      "family=m k=10000 xi=1.000503,-2.567e-8,1.999e-4,1.283e-4,1.929e-4,-0.999\n";
  return text;
}

std::vector<SeedRecord> default_seeds() { return parse_seeds(default_seed_text()); }

PointSolution consistency_point(Family f, double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg) {
  const Chart c = chart_for(f);
  check_chart_k(c, k);
  const SeedRecord* best = nullptr;
  for (const auto& s : seeds)
    if (s.family == f && (!best || std::abs(std::log(s.k / k)) < std::abs(std::log(best->k / k)))) best = &s;
  if (!best) throw Error(ErrorCode::BadInput, "no seed for family " + family_name(f));
  NewtonResult r = solve_consistency(c, best->k, best->xi, cfg);
  if (best->k != k) {
    // small relative steps near the seed, where the solution moves fastest
    const KTrack t = k_track_geometric(c, r.x, best->k, k, 1.05, cfg);
    if (t.failed_at >= 0) throw Error(ErrorCode::NoConvergence, "k continuation failed: " + t.error);
    r = solve_consistency(c, k, t.path.back().second, cfg);
  }
  return {f, k, r.x, r.residual, r.iterations};
}

}  // namespace relucrit
