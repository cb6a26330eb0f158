#pragma once

#include <string>
#include <vector>

#include "relucrit/charts.hpp"
#include "relucrit/families.hpp"
#include "relucrit/matrix.hpp"
#include "relucrit/newton.hpp"

namespace relucrit {

// xi_c = constant + sum_n a_n k^{-n/2}
struct SeriesTerm {
  int n = 0;
  double value = 0;
  bool numeric_only = false;  // only a decimal value is published
};
struct SeriesCoordinate {
  double constant = 0;
  std::vector<SeriesTerm> terms;  // increasing n
};
struct SeriesModel {
  Family family = Family::A;
  std::vector<SeriesCoordinate> coords;
  double coefficient(std::size_t coord, int n) const;  // 0 when absent
};

SeriesModel series_model(Family f);  // A, I, II; UnknownFamily otherwise

// Truncated3 / Truncated4: the constant plus the first two / three published terms per coordinate.
enum class SeriesVariant { Truncated3, Truncated4, All };
Coords series_eval(Family f, double k, SeriesVariant v);

struct ComparisonRow {
  std::string label;  // "a", "a+", "s", "solved"
  Coords values;
  Coords abs_error;  // against the solved point, empty for "solved"
};
struct Comparison {
  Family family = Family::A;
  double k = 0;
  std::vector<ComparisonRow> rows;
  const ComparisonRow& row(const std::string& label) const;
};
Comparison compare_approximations(Family f, double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg = {});

struct DecaySample {
  double k = 0, F = 0, normalized = 0;
};
std::vector<double> geometric_grid(double k_min, double k_max, double factor = 2);
// normalized = k F for II and M, F for A and I.
std::vector<DecaySample> decay_scan(Family f, const std::vector<double>& ks, const std::vector<SeedRecord>& seeds,
                                    const NewtonConfig& cfg = {});
struct DecayFit {
  double constant = 0, slope = 0;  // normalized ~ constant + slope / sqrt(k)
};
DecayFit fit_decay(const std::vector<DecaySample>& s);

// Zeros y_k < 0 < z_k of the scalar gradient on the all-equal line.
struct GammaPoints {
  double y = 0, z = 0;
};
GammaPoints closed_form_gamma_points(double k);
// 2 Psi^k(x) / k^2 on the all-equal line x 1_{k,k}.
double psi_k_scaled(double x, double k, double lam = 1);

struct ZCurve {
  double printed = 0;         // 1/k + lam (sqrt(k-1) - acos(1/sqrt k)) / pi
  double psi_consistent = 0;  // zero of the scalar gradient, 1/k + lam (sqrt(k-1) - acos(1/sqrt k)) / (pi k)
};
ZCurve z_curve(double k, double lam);

struct ReversedRowPoint {
  double x = 0, y = 0;
  WeightMatrix w;
  // Scalar reduction: distinct gradient values on the first row and on the remaining rows (times 2 pi / k).
  double residual_first = 0, residual_rest = 0;
};
ReversedRowPoint reversed_row_point(int k);

struct AngleCheck {
  std::string name;
  double computed = 0, expansion = 0, deviation = 0, next_order = 0, ratio = 0;
};
// Type II consistency point against its large-k expansions of norms and angles.
std::vector<AngleCheck> asymptotic_angle_check(double k, const std::vector<SeedRecord>& seeds, const NewtonConfig& cfg = {});

struct FittedCoefficient {
  std::size_t coord = 0;
  int n = 0;
  double fitted = 0, model = 0;
};
// Two-point Richardson extraction of coefficient n of the consistency solutions, with the model's lower orders removed.
std::vector<FittedCoefficient> fit_consistency_coefficients(Family f, double k1, double k2,
                                                            const std::vector<std::pair<std::size_t, int>>& wanted,
                                                            const std::vector<SeedRecord>& seeds,
                                                            const NewtonConfig& cfg = {});

}  // namespace relucrit
