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

#ifndef FRACSOLVE_OPERATORS_HPP
#define FRACSOLVE_OPERATORS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fracsolve/toeplitz.hpp"
#include "fracsolve/weights.hpp"

namespace fracsolve {

struct OperatorWorkspace {
  std::vector<double> t1, t2, tr_in, tr_out;
  ToeplitzWorkspace tz1, tz2;
};

/// The 1D coefficient operator A = (1 + s*ht) I - eps^2*ht*cbar*G applied
/// matrix-free. G is the symmetric Toeplitz weight matrix; cbar*G is the
/// discretized Riesz operator (negative semidefinite), so A is symmetric
/// positive definite with smallest eigenvalue above 1 + s*ht.
class FracOperator1D {
 public:
  FracOperator1D(FracOrder alpha, SchemeId scheme, std::size_t m, double hx, double ht, double eps, double s);
  /// Same parameters but with a caller-supplied first column for G; used for
  /// experiments with operators outside the weight family.
  FracOperator1D(SymToeplitz g, FracOrder alpha, SchemeId scheme, double hx, double ht, double eps, double s);

  std::size_t dim() const { return matvec_.dim(); }
  double alpha() const { return alpha_.value(); }
  SchemeId scheme() const { return scheme_; }
  double hx() const { return hx_; }
  double ht() const { return ht_; }
  double eps() const { return eps_; }
  double stabilization() const { return s_; }
  double cbar_value() const { return cbar_; }
  double identity_coeff() const { return 1.0 + s_ * ht_; }
  double diffusion_coeff() const { return eps_ * eps_ * ht_; }
  const SymToeplitz& G() const { return matvec_.matrix(); }

  OperatorWorkspace make_workspace() const;
  /// out = (1 + s*ht) v - eps^2*ht*cbar*(G v)
  void apply(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const;
  std::vector<double> apply(std::span<const double> v) const;
  /// out = cbar*(G v): the discrete Riesz operator without the eps^2 factor.
  void apply_riesz(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const;

 private:
  FracOrder alpha_;
  SchemeId scheme_;
  double hx_, ht_, eps_, s_, cbar_;
  ToeplitzMatvec matvec_;
};

/// The 2D coefficient operator
///   A = (1 + s*ht) I - eps^2*ht*(cbar_1 G_1 (x) I + I (x) cbar_2 G_2)
/// on an m1*m2 grid stored row-major (axis-1 index major). Axis products are
/// batched 1D Toeplitz matvecs; the axis-1 pass runs on a transposed copy.
class FracOperator2D {
 public:
  FracOperator2D(FracOrder alpha1, FracOrder alpha2, SchemeId scheme, std::size_t m1, std::size_t m2,
                 double hx1, double hx2, double ht, double eps, double s);

  std::size_t dim() const { return m1_ * m2_; }
  std::size_t dim1() const { return m1_; }
  std::size_t dim2() const { return m2_; }
  double alpha1() const { return alpha1_.value(); }
  double alpha2() const { return alpha2_.value(); }
  SchemeId scheme() const { return scheme_; }
  double ht() const { return ht_; }
  double eps() const { return eps_; }
  double stabilization() const { return s_; }
  double hx1() const { return hx1_; }
  double hx2() const { return hx2_; }
  double cbar1() const { return cbar1_; }
  double cbar2() const { return cbar2_; }
  double identity_coeff() const { return 1.0 + s_ * ht_; }
  double diffusion_coeff() const { return eps_ * eps_ * ht_; }
  const SymToeplitz& G1() const { return matvec1_.matrix(); }
  const SymToeplitz& G2() const { return matvec2_.matrix(); }

  OperatorWorkspace make_workspace() const;
  void apply(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const;
  std::vector<double> apply(std::span<const double> v) const;
  /// out = (cbar_1 G_1 (x) I + I (x) cbar_2 G_2) v
  void apply_riesz(std::span<const double> v, std::span<double> out, OperatorWorkspace& ws) const;

 private:
  FracOrder alpha1_, alpha2_;
  SchemeId scheme_;
  std::size_t m1_, m2_;
  double hx1_, hx2_, ht_, eps_, s_, cbar1_, cbar2_;
  ToeplitzMatvec matvec1_, matvec2_;
};

}  // namespace fracsolve

#endif  // FRACSOLVE_OPERATORS_HPP
