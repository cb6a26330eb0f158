#include "relucrit/charts.hpp"

#include <cmath>
#include <numbers>

#include "relucrit/error.hpp"
#include "relucrit/kernel.hpp"

namespace relucrit {

Chart Chart::delta_block(int p) {
  if (p < 2) throw Error(ErrorCode::UnsupportedChart, "DeltaBlock needs p >= 2");
  return {ChartKind::DeltaBlock, p, 6};
}

std::string Chart::name() const {
  switch (kind) {
    case ChartKind::DeltaSk: return "DeltaSk";
    case ChartKind::DeltaSk1: return "DeltaSk1";
    case ChartKind::DeltaBlock: return "DeltaBlock" + std::to_string(p);
  }
  return "?";
}

void check_chart_k(const Chart& c, double k) {
  if (!(k >= c.p + 2)) throw Error(ErrorCode::DimensionMismatch, c.name() + " needs k >= p + 2");
}

void check_coords(const Chart& c, const Coords& xi) {
  if (int(xi.size()) != c.m)
    throw Error(ErrorCode::DimensionMismatch,
                c.name() + " expects " + std::to_string(c.m) + " coordinates, got " + std::to_string(xi.size()));
}

namespace {

// Block index of row/column i: 0 for the leading k - p indices, 1 for the trailing p.
std::size_t block_of(const Chart& c, std::size_t i, std::size_t k) {
  return i + std::size_t(c.p) >= k ? 1 : 0;
}

// Which coordinate sits at entry (i, j); -1 never happens for valid charts.
int coord_index(const Chart& c, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t bi = block_of(c, i, k), bj = block_of(c, j, k);
  if (bi == 0 && bj == 0) return i == j ? 0 : 1;
  if (bi == 0) return 2;
  if (bj == 0) return 3;
  return i == j ? 4 : 5;
}

}  // namespace

WeightMatrix embed(const Chart& c, const Coords& xi, std::size_t k) {
  check_coords(c, xi);
  check_chart_k(c, double(k));
  WeightMatrix w(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) w(i, j) = xi[coord_index(c, i, j, k)];
  return w;
}

double fixed_space_deviation(const Chart& c, const WeightMatrix& w) {
  const std::size_t k = w.rows();
  if (w.cols() != k) throw Error(ErrorCode::DimensionMismatch, "chart matrices are square");
  check_chart_k(c, double(k));
  std::vector<double> first(6, 0.0);
  std::vector<bool> seen(6, false);
  double dev = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const int q = coord_index(c, i, j, k);
      if (!seen[q]) {
        seen[q] = true;
        first[q] = w(i, j);
      } else {
        dev = std::max(dev, std::abs(w(i, j) - first[q]));
      }
    }
  return dev;
}

Coords extract(const Chart& c, const WeightMatrix& w, double tol) {
  const double dev = fixed_space_deviation(c, w);
  if (dev > tol)
    throw Error(ErrorCode::NotInFixedSpace, c.name() + " pattern violated, max deviation " + std::to_string(dev));
  const std::size_t k = w.rows();
  const std::size_t p = std::size_t(c.p);
  Coords xi;
  xi.push_back(w(0, 0));
  xi.push_back(w(0, 1));
  if (c.p >= 1) {
    xi.push_back(w(0, k - 1));
    xi.push_back(w(k - 1, 0));
    xi.push_back(w(k - 1, k - 1));
  }
  if (c.p >= 2) xi.push_back(w(k - p, k - 1));
  return xi;
}

std::vector<double> column_sums(const Chart& c, const Coords& xi, double k) {
  check_coords(c, xi);
  check_chart_k(c, k);
  const double p = c.p;
  if (c.p == 0) return {xi[0] + (k - 1) * xi[1]};
  if (c.p == 1) return {xi[0] + (k - 2) * xi[1] + xi[3], (k - 1) * xi[2] + xi[4]};
  return {xi[0] + (k - p - 1) * xi[1] + p * xi[3], (k - p) * xi[2] + xi[4] + (p - 1) * xi[5]};
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "compose: sizes differ");
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

WeightMatrix group_act(const Permutation& rho, const Permutation& eta, const WeightMatrix& w) {
  if (rho.size() != w.rows() || eta.size() != w.cols())
    throw Error(ErrorCode::DimensionMismatch, "group_act: permutation sizes do not match");
  WeightMatrix r(w.rows(), w.cols());
  // result[rho(i)][eta(j)] = w[i][j], i.e. result[i][j] = w[rho^-1(i)][eta^-1(j)]
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) r(rho[i], eta[j]) = w(i, j);
  return r;
}

bool isotropy_contains(const WeightMatrix& w, const Chart& c, double tol) {
  const std::size_t k = w.rows();
  if (w.cols() != k || k < std::size_t(c.p) + 2) return false;
  const std::size_t split = k - std::size_t(c.p);
  auto check = [&](std::size_t a) {
    Permutation g(k);
    for (std::size_t i = 0; i < k; ++i) g[i] = i;
    std::swap(g[a], g[a + 1]);
    const WeightMatrix h = group_act(g, g, w);
    for (std::size_t i = 0; i < w.data().size(); ++i)
      if (std::abs(h.data()[i] - w.data()[i]) > tol) return false;
    return true;
  };
  for (std::size_t a = 0; a + 1 < split; ++a)
    if (!check(a)) return false;
  for (std::size_t a = split; a + 1 < k; ++a)
    if (!check(a)) return false;
  return true;
}

IsotypicParts isotypic_project(const WeightMatrix& w) {
  const std::size_t k = w.rows(), d = w.cols();
  std::vector<double> rmean(k, 0.0), cmean(d, 0.0);
  double grand = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      rmean[i] += w(i, j) / double(d);
      cmean[j] += w(i, j) / double(k);
      grand += w(i, j);
    }
  grand /= double(k * d);
  IsotypicParts p{WeightMatrix(k, d, grand), WeightMatrix(k, d), WeightMatrix(k, d), WeightMatrix(k, d)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      p.part_R1(i, j) = cmean[j] - grand;
      p.part_C1(i, j) = rmean[i] - grand;
      p.part_A(i, j) = w(i, j) - rmean[i] - cmean[j] + grand;
    }
  return p;
}

bool in_omega_a(const WeightMatrix& w, const WeightMatrix& v, double tol) {
  using std::numbers::pi;
  auto parallel = [tol](ConstRow a, ConstRow b) {
    const double t = angle_between(a, b);
    return t < tol || t > pi - tol;
  };
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = i + 1; j < w.rows(); ++j)
      if (parallel(w.row(i), w.row(j))) return false;
    for (std::size_t j = 0; j < v.rows(); ++j)
      if (parallel(w.row(i), v.row(j))) return false;
  }
  return true;
}

}  // namespace relucrit
