#pragma once

#include <string>
#include <vector>

#include "relucrit/families.hpp"
#include "relucrit/newton.hpp"

namespace relucrit {

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string csv() const;  // header row, LF line ends
};

const std::vector<std::string>& table_names();  // inftable1 inftable4 compA compI compII typeM
// Recomputes the named table from the solvers. Throws BadInput for an unknown name.
Table build_table(const std::string& name, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg = {});

Table consistency_record(Family f, double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg = {});

enum class Method { Jump, Path };
Table critical_record(Family f, double k, Method m, double lam_inc, const std::vector<SeedRecord>& seeds,
                      const NewtonConfig& cfg = {});

// Samples on a geometric grid, then one "fit" row carrying the extrapolated constant.
Table decay_table(Family f, double k_min, double k_max, double factor, const std::vector<SeedRecord>& seeds,
                  const NewtonConfig& cfg = {});

}  // namespace relucrit
