#pragma once

#include <string>
#include <vector>

#include "relucrit/charts.hpp"
#include "relucrit/newton.hpp"

namespace relucrit {

enum class Family { A, I, II, M };

Chart chart_for(Family f);
Family parse_family(const std::string& s);  // a | i | ii | m, case-insensitive
std::string family_name(Family f);

struct SeedRecord {
  Family family;
  double k;
  Coords xi;
};

// One record per line: family=<a|i|ii|m> k=<real> xi=<v1,v2,...>   ('#' starts a comment).
// t=<rho[,nu,eps]> may replace xi; it is converted with the chart's seed parametrization.
std::vector<SeedRecord> parse_seeds(const std::string& text);
std::vector<SeedRecord> load_seed_file(const std::string& path);
const std::string& default_seed_text();
std::vector<SeedRecord> default_seeds();

struct PointSolution {
  Family family = Family::A;
  double k = 0;
  Coords xi;
  double residual = 0;
  int iterations = 0;
};

// Solves the consistency equations at the nearest seed for the family, then follows k
// geometrically to the requested value.
PointSolution consistency_point(Family f, double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg = {});

}  // namespace relucrit
