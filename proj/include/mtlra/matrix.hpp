// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "mtlra/errors.hpp"

namespace mtlra {

using Vec = std::vector<double>;

// Dense row-major matrix of doubles. rows*cols == data.size() always.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
      throw DimensionError("Matrix: shape must be positive, got " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    data_.assign(static_cast<std::size_t>(rows) * cols, fill);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double& operator()(int r, int c) { return at(r, c); }
  double operator()(int r, int c) const { return at(r, c); }

  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  Vec& data() { return data_; }
  const Vec& data() const { return data_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  void fill(double v) { data_.assign(data_.size(), v); }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  static Matrix zeros_like(const Matrix& o) { return Matrix(o.rows_, o.cols_); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vec data_;
};

inline bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace mtlra
