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

#ifndef FRACSOLVE_SYMBOL_HPP
#define FRACSOLVE_SYMBOL_HPP

#include <cstddef>
#include <vector>

#include "fracsolve/weights.hpp"

namespace fracsolve {

/// Which route evaluates the generating function of {G_M}:
/// - ClosedForm: the analytic expression per scheme, evaluated at |x| (the
///   function is even; |sin(x/2)|^alpha makes the extension explicit).
/// - CoefficientSum: the truncated cosine series
///     f(x) = 2 sum_{k=0}^{n_terms} omega_k cos((k-1) x),
///   which is the source of truth; the PQ1M1 closed form as published
///   disagrees with it away from x in {0, pi} (see closed_form_discrepancy).
enum class SymbolForm { ClosedForm, CoefficientSum };

struct SymbolFn {
  FracOrder alpha;
  SchemeId scheme;
  SymbolForm form = SymbolForm::ClosedForm;
  std::size_t n_terms = 0;  // CoefficientSum truncation
};

double symbol_eval(const SymbolFn& s, double x);

enum class SampleGrid {
  TauGrid,     // x_j = j*pi/(M+1), j = 1..M
  UniformGrid  // x_j = j*pi/M,     j = 1..M
};

std::vector<double> symbol_samples(const SymbolFn& s, std::size_t M, SampleGrid grid);

/// sup |closed - coefficient| over an equispaced grid of [0, pi]; used to
/// quantify how far the published closed form strays from the series.
double closed_form_discrepancy(FracOrder alpha, SchemeId scheme, std::size_t n_terms, std::size_t grid_points);

/// Sorted eigenvalues against sorted symbol samples: sup norm and the mean
/// absolute difference of the sorted lists (exact Wasserstein-1 distance for
/// equal-size empirical distributions).
struct DistributionReport {
  std::vector<double> sorted_eigs;
  std::vector<double> sorted_samples;
  double sup_diff = 0.0;
  double wasserstein1 = 0.0;
};

DistributionReport esd_compare(std::vector<double> eigs, std::vector<double> samples);

}  // namespace fracsolve

#endif  // FRACSOLVE_SYMBOL_HPP
