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

#ifndef FRACSOLVE_SPECTRA_HPP
#define FRACSOLVE_SPECTRA_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "fracsolve/dense.hpp"
#include "fracsolve/operators.hpp"
#include "fracsolve/tau.hpp"
#include "fracsolve/toeplitz.hpp"

namespace fracsolve {

/// Dense assemblies for oracle-scale spectral work.
DenseMatrix dense_toeplitz(const SymToeplitz& t);
DenseMatrix dense_operator(const FracOperator1D& op);
DenseMatrix dense_operator(const FracOperator2D& op);
DenseMatrix dense_precond(const FracOperator1D& op);
DenseMatrix dense_precond(const FracOperator2D& op);

/// Eigenvalues of P^{-1/2} A P^{-1/2} (same spectrum as P^{-1} A), computed
/// densely. Size limits: M <= 512 in 1D, M_i <= 32 in 2D.
std::vector<double> precond_spectrum(const FracOperator1D& op, const TauPrecond1D& p);
std::vector<double> precond_spectrum(const FracOperator2D& op, const TauPrecond2D& p);

/// How tightly a spectrum clusters around a center: for each radius, the
/// fraction of eigenvalues inside [center-r, center+r] and the outlier count.
struct ClusterReport {
  double center = 0.0;
  std::vector<double> radii;                      // ascending
  std::vector<double> fractions;                  // nondecreasing with radius
  std::map<double, std::size_t> outlier_count_at; // radius -> count outside
};

ClusterReport cluster_report(std::span<const double> eigs, double center, std::vector<double> radii);

}  // namespace fracsolve

#endif  // FRACSOLVE_SPECTRA_HPP
