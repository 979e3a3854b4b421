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

#include "fracsolve/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracsolve {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> v) const {
  if (v.size() != cols_) throw std::invalid_argument("DenseMatrix::multiply: dimension mismatch");
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* r = data_.data() + i * cols_;
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

namespace {

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

double off_diag_norm(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> sym_eigs(const DenseMatrix& input) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("sym_eigs: matrix must be square");
  if (n > 4096) throw std::invalid_argument("sym_eigs: dimension above the 4096 oracle limit");
  if (n == 0) return {};

  double max_abs = 0.0;
  for (double v : input.data()) max_abs = std::max(max_abs, std::abs(v));
  const double sym_tol = 1e-12 * std::max(1.0, max_abs);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(input(i, j) - input(j, i)) > sym_tol) {
        throw std::invalid_argument("sym_eigs: matrix is not symmetric");
      }
    }
  }

  DenseMatrix a = input;
  const double norm = frobenius_norm(a);
  if (norm == 0.0) return std::vector<double>(n, 0.0);
  const double target = 1e-12 * norm;

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double off = off_diag_norm(a);
    if (off <= target) break;
    // Skip rotations on entries too small to matter this sweep.
    const double thresh = (sweep < 3) ? 0.2 * off / static_cast<double>(n) : 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= thresh) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (std::abs(apq) <= 1e-300) {
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        double* rp = a.row(p).data();
        double* rq = a.row(q).data();
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = rp[k];
          const double akq = rq[k];
          rp[k] = c * akp - s * akq;
          rq[k] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
      }
    }
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = a(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace fracsolve
