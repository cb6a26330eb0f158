#include "relucrit/matrix.hpp"

#include <cmath>

#include "relucrit/error.hpp"

namespace relucrit {

WeightMatrix WeightMatrix::identity(std::size_t k) {
  WeightMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

std::vector<double> WeightMatrix::column_sums() const {
  std::vector<double> s(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[j] += (*this)(i, j);
  return s;
}

double WeightMatrix::frobenius() const {
  double s = 0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

double WeightMatrix::max_abs() const {
  double m = 0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

static void check_same(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
}

WeightMatrix& WeightMatrix::operator+=(const WeightMatrix& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

WeightMatrix& WeightMatrix::operator-=(const WeightMatrix& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

WeightMatrix& WeightMatrix::operator*=(double s) {
  for (double& x : a_) x *= s;
  return *this;
}

WeightMatrix operator+(WeightMatrix a, const WeightMatrix& b) { return a += b; }
WeightMatrix operator-(WeightMatrix a, const WeightMatrix& b) { return a -= b; }
WeightMatrix operator*(double s, WeightMatrix a) { return a *= s; }

double frobenius_dot(const WeightMatrix& a, const WeightMatrix& b) {
  check_same(a, b);
  double s = 0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

}  // namespace relucrit
