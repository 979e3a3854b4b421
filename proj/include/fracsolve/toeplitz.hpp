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

#ifndef FRACSOLVE_TOEPLITZ_HPP
#define FRACSOLVE_TOEPLITZ_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fracsolve/fft.hpp"
#include "fracsolve/weights.hpp"

namespace fracsolve {

/// Real symmetric Toeplitz matrix stored as its first column: entry (i,j)
/// equals col[|i-j|].
struct SymToeplitz {
  std::vector<double> col;
  std::size_t dim() const { return col.size(); }
};

/// First column of G = L + L^T where L is the lower-Hessenberg weight matrix
/// with diagonal omega_1 and superdiagonal omega_0:
///   c_0 = 2*omega_1, c_1 = omega_0 + omega_2, c_k = omega_{k+1} (k >= 2).
/// Requires M >= 2; uses weights truncated at n = M.
SymToeplitz build_G(FracOrder alpha, SchemeId scheme, std::size_t M);

/// cbar = -1 / (2 h^alpha cos(alpha pi/2)); strictly positive on (1,2).
double cbar(FracOrder alpha, double hx);

struct ToeplitzWorkspace {
  std::vector<cdouble> buf;
  FftWorkspace fft;
};

/// Matrix-free product with a symmetric Toeplitz matrix via circulant
/// embedding: the first column is embedded into a circulant of length
/// next_pow2(2M) whose transform is precomputed, so each product costs one
/// forward/inverse FFT pair. Immutable after construction; concurrent
/// applies need distinct workspaces.
class ToeplitzMatvec {
 public:
  explicit ToeplitzMatvec(SymToeplitz t);

  std::size_t dim() const { return t_.dim(); }
  const SymToeplitz& matrix() const { return t_; }

  ToeplitzWorkspace make_workspace() const;
  void apply(std::span<const double> v, std::span<double> out, ToeplitzWorkspace& ws) const;
  std::vector<double> apply(std::span<const double> v) const;

 private:
  SymToeplitz t_;
  std::size_t len_;
  FftPlan fft_;
  std::vector<cdouble> col_fft_;
};

}  // namespace fracsolve

#endif  // FRACSOLVE_TOEPLITZ_HPP
