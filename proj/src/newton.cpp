#include "relucrit/newton.hpp"

#include <cmath>
#include <sstream>

#include "relucrit/error.hpp"

namespace relucrit {

double inf_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

namespace {

// Returns the sign of the permutation, or 0 when singular.
int eliminate(DenseMatrix& a, std::vector<double>* b) {
  const std::size_t n = a.size();
  int sign = 1;
  double scale = 0;
  for (const auto& r : a)
    for (double x : r) scale = std::max(scale, std::abs(x));
  if (scale == 0) return 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) <= 1e-15 * scale) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      if (b) std::swap((*b)[piv], (*b)[c]);
      sign = -sign;
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      if (b) (*b)[r] -= f * (*b)[c];
    }
  }
  return sign;
}

}  // namespace

std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "solve_linear: rhs length");
  if (eliminate(a, &b) == 0) throw Error(ErrorCode::SingularJacobian, "matrix is singular to working precision");
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

double determinant(DenseMatrix a) {
  const int sign = eliminate(a, nullptr);
  if (sign == 0) return 0;
  double d = sign;
  for (std::size_t i = 0; i < a.size(); ++i) d *= a[i][i];
  return d;
}

DenseMatrix fd_jacobian(const ResidualFn& f, const std::vector<double>& x, double step) {
  const std::size_t n = x.size();
  DenseMatrix j;
  std::vector<double> xp = x, xm = x;
  for (std::size_t c = 0; c < n; ++c) {
    const double hc = std::max(step, step * std::abs(x[c]));
    xp[c] = x[c] + hc;
    xm[c] = x[c] - hc;
    const auto fp = f(xp), fm = f(xm);
    xp[c] = xm[c] = x[c];
    if (j.empty()) j.assign(fp.size(), std::vector<double>(n));
    for (std::size_t r = 0; r < fp.size(); ++r) j[r][c] = (fp[r] - fm[r]) / (2 * hc);
  }
  return j;
}

NewtonResult newton_solve(const ResidualFn& f, std::vector<double> x, const NewtonConfig& cfg) {
  if (cfg.max_iters < 1 || !(cfg.tol_residual > 0)) throw Error(ErrorCode::BadInput, "invalid Newton configuration");
  std::vector<double> r = f(x);
  double rn = inf_norm(r);
  int it = 0;
  while (!(rn <= cfg.tol_residual)) {
    if (it == cfg.max_iters) {
      std::ostringstream os;
      os << "residual " << rn << " after " << it << " iterations";
      throw Error(ErrorCode::NoConvergence, os.str());
    }
    ++it;
    const DenseMatrix j = fd_jacobian(f, x, cfg.fd_step);
    std::vector<double> neg(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
    const std::vector<double> dx = solve_linear(j, neg);
    double t = 1;
    bool accepted = false;
    for (int h = 0; h <= (cfg.damping ? 20 : 0); ++h, t /= 2) {
      std::vector<double> xt = x;
      for (std::size_t i = 0; i < x.size(); ++i) xt[i] += t * dx[i];
      std::vector<double> rt;
      try {
        rt = f(xt);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAdmissible || !cfg.damping) throw;
        continue;
      }
      const double rtn = inf_norm(rt);
      if (!cfg.damping || rtn < rn) {
        x = std::move(xt);
        r = std::move(rt);
        rn = rtn;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (rn <= cfg.tol_floor) break;
      std::ostringstream os;
      os << "stagnated at residual " << rn << " after " << it << " iterations";
      throw Error(ErrorCode::NoConvergence, os.str());
    }
  }
  return {x, rn, it};
}

}  // namespace relucrit
