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

#ifndef FRACSOLVE_TAU_HPP
#define FRACSOLVE_TAU_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fracsolve/dense.hpp"
#include "fracsolve/fft.hpp"
#include "fracsolve/operators.hpp"
#include "fracsolve/toeplitz.hpp"

namespace fracsolve {

struct DstWorkspace {
  std::vector<cdouble> ext;
  FftWorkspace fft;
};

/// Type-I discrete sine transform with the symmetric orthogonal kernel
/// S[i][j] = sqrt(2/(M+1)) sin(i*j*pi/(M+1)), realized as a complex FFT of
/// the odd extension of length 2(M+1). S is involutory: S*S = I.
class Dst1Plan {
 public:
  explicit Dst1Plan(std::size_t m);

  std::size_t size() const { return m_; }
  DstWorkspace make_workspace() const;
  void apply(std::span<const double> in, std::span<double> out, DstWorkspace& ws) const;
  std::vector<double> apply(std::span<const double> in) const;

 private:
  std::size_t m_;
  FftPlan fft_;   // length 2(m+1)
  double scale_;  // sqrt(2/(m+1))
};

/// Eigenvalues of the tau approximation of a symmetric Toeplitz matrix:
///   lambda_j = c_0 + 2 sum_{k=1}^{M-1} c_k cos(k*j*pi/(M+1)), j = 1..M,
/// computed with one FFT of the symmetrically extended coefficient vector.
std::vector<double> tau_eigs(const SymToeplitz& t);

/// Dense tau matrix (oracle sizes, M <= 512): the Toeplitz matrix minus the
/// Hankel correction H_{ij} = c_{i+j} + c_{2(M+1)-(i+j)} (1-based indices,
/// c_k = 0 outside 0..M-1), whose first column is [c_2..c_{M-1},0,0] and
/// whose last column is its flip.
DenseMatrix tau_dense(const SymToeplitz& t);

struct PrecondWorkspace {
  std::vector<double> a, b;
  DstWorkspace dst1, dst2;
};

/// Diagonalized tau preconditioner P = (1+s*ht) I - eps^2*ht*cbar*tau(G):
/// its inverse (and any spectral power) applies as S diag(f(lambda)) S in
/// O(M log M). Eigenvalues are validated positive at build time.
class TauPrecond1D {
 public:
  explicit TauPrecond1D(std::vector<double> lambda);
  static TauPrecond1D build(const FracOperator1D& op);

  std::size_t dim() const { return lambda_.size(); }
  const std::vector<double>& eigenvalues() const { return lambda_; }

  PrecondWorkspace make_workspace() const;
  void apply_inverse(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const;
  void apply_forward(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const;
  void apply_inv_sqrt(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const;
  std::vector<double> apply_inverse(std::span<const double> v) const;

 private:
  void apply_scaled(std::span<const double> v, std::span<double> out, std::span<const double> factors,
                    PrecondWorkspace& ws) const;

  std::vector<double> lambda_, inv_, inv_sqrt_;
  Dst1Plan dst_;
};

/// Two-level tau preconditioner with eigenvalue grid
///   lambda(i,j) = (1+s*ht) - eps^2*ht*(cbar_1 lam1_i + cbar_2 lam2_j)
/// diagonalized by S_{M1} (x) S_{M2}.
class TauPrecond2D {
 public:
  TauPrecond2D(std::size_t m1, std::size_t m2, std::vector<double> lambda);
  static TauPrecond2D build(const FracOperator2D& op);

  std::size_t dim() const { return m1_ * m2_; }
  std::size_t dim1() const { return m1_; }
  std::size_t dim2() const { return m2_; }
  const std::vector<double>& eigenvalues() const { return lambda_; }

  PrecondWorkspace make_workspace() const;
  void apply_inverse(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const;
  void apply_forward(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const;
  void apply_inv_sqrt(std::span<const double> v, std::span<double> out, PrecondWorkspace& ws) const;
  std::vector<double> apply_inverse(std::span<const double> v) const;

 private:
  void apply_scaled(std::span<const double> v, std::span<double> out, std::span<const double> factors_t,
                    PrecondWorkspace& ws) const;

  std::size_t m1_, m2_;
  std::vector<double> lambda_;                    // (i1,i2) row-major
  std::vector<double> inv_t_, inv_sqrt_t_, fwd_t_;  // transposed (i2,i1) layout
  Dst1Plan dst1_, dst2_;
};

}  // namespace fracsolve

#endif  // FRACSOLVE_TAU_HPP
