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

#include "fracsolve/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracsolve {

namespace {

double closed_form(double a, SchemeId scheme, double x) {
  x = std::abs(x);  // even extension
  const double prefactor = std::pow(2.0, a + 1.0) * std::pow(std::abs(std::sin(x / 2.0)), a);
  const double theta = (a / 2.0) * (x - std::numbers::pi);
  if (scheme == SchemeId::PQ10) {
    return prefactor * ((a / 2.0) * std::cos(theta - x) + ((2.0 - a) / 2.0) * std::cos(theta));
  }
  // PQ1M1 as published; see closed_form_discrepancy for how far this strays
  // from the coefficient series.
  return prefactor * ((a / 2.0) * std::sin(theta - x) * std::sin(x) + std::cos(theta) * std::cos(x));
}

double coefficient_sum(const std::vector<double>& w, double x) {
  double s = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    s += w[k] * std::cos((static_cast<double>(k) - 1.0) * x);
  }
  return 2.0 * s;
}

}  // namespace

double symbol_eval(const SymbolFn& s, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("symbol_eval: x must be finite");
  if (s.form == SymbolForm::ClosedForm) {
    return closed_form(s.alpha.value(), s.scheme, x);
  }
  const auto wv = wsgd_weights_cached(s.alpha, s.scheme, s.n_terms);
  return coefficient_sum(wv->w, x);
}

std::vector<double> symbol_samples(const SymbolFn& s, std::size_t M, SampleGrid grid) {
  if (M < 1) throw std::invalid_argument("symbol_samples: M must be positive");
  std::vector<double> out(M);
  // Fetch the weights once for the series form.
  std::shared_ptr<const WeightVector> wv;
  if (s.form == SymbolForm::CoefficientSum) wv = wsgd_weights_cached(s.alpha, s.scheme, s.n_terms);
  const double denom = grid == SampleGrid::TauGrid ? static_cast<double>(M + 1) : static_cast<double>(M);
  for (std::size_t j = 1; j <= M; ++j) {
    const double x = static_cast<double>(j) * std::numbers::pi / denom;
    out[j - 1] = wv ? coefficient_sum(wv->w, x) : closed_form(s.alpha.value(), s.scheme, x);
  }
  return out;
}

double closed_form_discrepancy(FracOrder alpha, SchemeId scheme, std::size_t n_terms, std::size_t grid_points) {
  if (grid_points < 2) throw std::invalid_argument("closed_form_discrepancy: need at least two grid points");
  const auto wv = wsgd_weights_cached(alpha, scheme, n_terms);
  double sup = 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    sup = std::max(sup, std::abs(closed_form(alpha.value(), scheme, x) - coefficient_sum(wv->w, x)));
  }
  return sup;
}

DistributionReport esd_compare(std::vector<double> eigs, std::vector<double> samples) {
  if (eigs.size() != samples.size()) throw std::invalid_argument("esd_compare: list lengths differ");
  DistributionReport rep;
  std::sort(eigs.begin(), eigs.end());
  std::sort(samples.begin(), samples.end());
  double sup = 0.0, acc = 0.0;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    const double d = std::abs(eigs[i] - samples[i]);
    sup = std::max(sup, d);
    acc += d;
  }
  rep.sup_diff = sup;
  rep.wasserstein1 = eigs.empty() ? 0.0 : acc / static_cast<double>(eigs.size());
  rep.sorted_eigs = std::move(eigs);
  rep.sorted_samples = std::move(samples);
  return rep;
}

}  // namespace fracsolve
