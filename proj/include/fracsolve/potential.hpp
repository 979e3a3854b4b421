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

#ifndef FRACSOLVE_POTENTIAL_HPP
#define FRACSOLVE_POTENTIAL_HPP

namespace fracsolve {

/// Logarithmic double-well free energy parameters. theta < theta_c gives the
/// double-well regime; theta == theta_c (allowed) is the convex single-well
/// boundary case. Arguments are clamped to [-1+clamp_delta, 1-clamp_delta]
/// before any logarithm.
struct PotentialParams {
  double theta = 0.8;
  double theta_c = 1.6;
  double clamp_delta = 1e-8;

  void validate() const;
};

/// f(u) = F'(u) = (theta/2) ln((1+u)/(1-u)) - theta_c u, clamped.
double potential_f(double u, const PotentialParams& p);

/// F(u) = (theta/2)[(1+u)ln(1+u) + (1-u)ln(1-u)] - (theta_c/2) u^2, clamped.
double potential_F(double u, const PotentialParams& p);

/// The positive root u* of f on (0,1) (bisection); the solution stays below
/// it when the scheme preserves the maximum bound. Requires theta < theta_c.
double potential_positive_root(const PotentialParams& p);

/// s = theta/(1-u*^2) - theta_c: the maximum of f' over [-u*, u*], which is
/// the smallest stabilization keeping v -> (1+s*ht)v - ht*f(v) monotone there.
double default_stabilization(const PotentialParams& p);

}  // namespace fracsolve

#endif  // FRACSOLVE_POTENTIAL_HPP
