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

#ifndef FRACSOLVE_WEIGHTS_HPP
#define FRACSOLVE_WEIGHTS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace fracsolve {

/// Shifted-difference scheme selector: the (p,q)=(1,0) and (p,q)=(1,-1)
/// weight families. (0,-1) is unstable for time-dependent problems and is
/// not offered.
enum class SchemeId { PQ10, PQ1M1 };

const char* scheme_name(SchemeId s);
std::optional<SchemeId> scheme_from_name(std::string_view name);

/// Fractional order alpha, restricted to the open interval (1,2). The
/// endpoints are rejected: cos(alpha*pi/2) vanishes at 1 and the operator
/// degenerates to the classical Laplacian at 2.
class FracOrder {
 public:
  explicit FracOrder(double alpha);
  double value() const { return alpha_; }

 private:
  double alpha_;
};

/// Truncated WSGD weight sequence omega_0..omega_n for one scheme.
struct WeightVector {
  FracOrder alpha;
  SchemeId scheme;
  std::vector<double> w;
};

/// Grunwald-Letnikov coefficients g_0..g_n via the stable recurrence
/// g_0 = 1, g_k = (1 - (alpha+1)/k) g_{k-1}.
std::vector<double> gl_coeffs(FracOrder alpha, std::size_t n);

/// WSGD weights omega_0..omega_n.
/// PQ10:  omega_0 = (a/2) g_0, omega_k = (a/2) g_k + ((2-a)/2) g_{k-1}.
/// PQ1M1: omega_k = ((a+2)/4) g_k for k<2, plus ((2-a)/4) g_{k-2} for k>=2.
WeightVector wsgd_weights(FracOrder alpha, SchemeId scheme, std::size_t n);

/// Cached variant; results are immutable and shared. Safe for concurrent
/// lookup and insert.
std::shared_ptr<const WeightVector> wsgd_weights_cached(FracOrder alpha, SchemeId scheme, std::size_t n);

/// Structural report on a truncated weight sequence: partial sums, the sign
/// and monotonicity properties of the weight family, and the tail magnitude
/// |sum_{k<=m} omega_k| (which decays to zero like m^{-alpha}).
struct WeightReport {
  double alpha;
  SchemeId scheme;
  std::vector<double> partial_sums;  // S_m for m = 0..m_max
  double tail_magnitude;             // |S_{m_max}|
  bool w0_positive;
  bool w1_negative;
  bool leading_closed_forms_match;   // omega_0..omega_2 vs their closed forms
  bool monotone_chain;               // 1 >= w0 >= w3 >= ... >= 0 (PQ10)
                                     // 1 >= w0 >= w2 >= w4 >= ... >= 0 (PQ1M1)
  bool partial_sums_negative;        // on m>=2 (PQ10); m=1 or m>=3 (PQ1M1)
};

/// Requires m >= 3 so every reported property has content.
WeightReport weight_report(FracOrder alpha, SchemeId scheme, std::size_t m);

}  // namespace fracsolve

#endif  // FRACSOLVE_WEIGHTS_HPP
