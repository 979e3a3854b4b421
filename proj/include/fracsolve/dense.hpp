// Copyright 2026 The fracsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF
// ANY KIND, EITHER EXPRESS OR IMPLIED. See the License for the specific
// language governing permissions and limitations under the License.

#ifndef FRACSOLVE_DENSE_HPP
#define FRACSOLVE_DENSE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fracsolve {

/// Row-major dense matrix for oracle-scale work.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  std::vector<double> multiply(std::span<const double> v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// All eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi
/// rotations run until the off-diagonal Frobenius norm drops below
/// 1e-12 * ||A||_F. Rejects non-symmetric input and dimensions above 4096.
std::vector<double> sym_eigs(const DenseMatrix& a);

}  // namespace fracsolve

#endif  // FRACSOLVE_DENSE_HPP
