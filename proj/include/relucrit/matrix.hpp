#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace relucrit {

// Dense row-major k x d matrix; rows are weight functionals.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static WeightMatrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  std::vector<double>& data() { return a_; }
  const std::vector<double>& data() const { return a_; }

  // W^Sigma: the row vector of column sums.
  std::vector<double> column_sums() const;

  double frobenius() const;
  double max_abs() const;

  WeightMatrix& operator+=(const WeightMatrix& o);
  WeightMatrix& operator-=(const WeightMatrix& o);
  WeightMatrix& operator*=(double s);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

WeightMatrix operator+(WeightMatrix a, const WeightMatrix& b);
WeightMatrix operator-(WeightMatrix a, const WeightMatrix& b);
WeightMatrix operator*(double s, WeightMatrix a);
double frobenius_dot(const WeightMatrix& a, const WeightMatrix& b);

}  // namespace relucrit
