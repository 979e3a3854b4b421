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

#include "fracsolve/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracsolve {

void PotentialParams::validate() const {
  if (!(theta > 0.0) || !(theta_c >= theta)) {
    throw std::invalid_argument("potential: parameters must satisfy 0 < theta <= theta_c");
  }
  if (!(clamp_delta > 0.0) || clamp_delta > 1e-4) {
    throw std::invalid_argument("potential: clamp_delta must lie in (0, 1e-4]");
  }
}

namespace {

double clamp_u(double u, const PotentialParams& p) {
  return std::clamp(u, -1.0 + p.clamp_delta, 1.0 - p.clamp_delta);
}

}  // namespace

double potential_f(double u, const PotentialParams& p) {
  const double v = clamp_u(u, p);
  return 0.5 * p.theta * std::log((1.0 + v) / (1.0 - v)) - p.theta_c * u;
}

double potential_F(double u, const PotentialParams& p) {
  const double v = clamp_u(u, p);
  return 0.5 * p.theta * ((1.0 + v) * std::log(1.0 + v) + (1.0 - v) * std::log(1.0 - v)) -
         0.5 * p.theta_c * u * u;
}

double potential_positive_root(const PotentialParams& p) {
  p.validate();
  if (!(p.theta < p.theta_c)) {
    throw std::invalid_argument("potential_positive_root: requires theta < theta_c");
  }
  // f is negative just right of 0 and positive near 1; bisect the sign change.
  double lo = 1e-12, hi = 1.0 - p.clamp_delta;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (potential_f(mid, p) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double default_stabilization(const PotentialParams& p) {
  const double ustar = potential_positive_root(p);
  return p.theta / (1.0 - ustar * ustar) - p.theta_c;
}

}  // namespace fracsolve
