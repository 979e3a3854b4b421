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

#ifndef FRACSOLVE_SIMULATE_HPP
#define FRACSOLVE_SIMULATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fracsolve/operators.hpp"
#include "fracsolve/pcg.hpp"
#include "fracsolve/potential.hpp"
#include "fracsolve/tau.hpp"
#include "fracsolve/weights.hpp"

namespace fracsolve {

enum class SolverKind { CG, TauPCG };

/// Stabilized semi-implicit stepping for the space-fractional Allen-Cahn
/// equation with zero Dirichlet boundary and logarithmic potential:
///   A u^{n+1} = (1 + s*ht) u^n - ht * f(u^n).
/// Grid convention: hx = (b-a)/(M+1) with M interior nodes per axis, ht = T/N.
struct SimConfig {
  int dimension = 1;  // 1 or 2
  double alpha = 1.5;
  double alpha2 = 1.5;  // second axis (2D)
  SchemeId scheme = SchemeId::PQ10;
  double domain_a = 0.0;
  double domain_b = 1.0;
  std::size_t m = 255;   // interior nodes, axis 1
  std::size_t m2 = 255;  // interior nodes, axis 2 (2D)
  double final_time = 1.0;
  std::size_t steps = 16;
  double eps = 0.3;
  std::optional<double> stabilization;  // default: derived from the potential
  PotentialParams potential;
  int problem = 1;  // initial condition id, 1..5
  std::uint64_t seed = 12345;
  std::vector<double> snapshot_times;  // nearest-step matched; empty -> {0, T}
  SolverKind solver = SolverKind::TauPCG;
  double tol = 1e-8;
  std::size_t maxit = 10000;

  double hx() const { return (domain_b - domain_a) / static_cast<double>(m + 1); }
  double hx2() const { return (domain_b - domain_a) / static_cast<double>(m2 + 1); }
  double ht() const { return final_time / static_cast<double>(steps); }
  std::size_t field_size() const { return dimension == 1 ? m : m * m2; }
  double stabilization_value() const;
  void validate() const;
};

struct Snapshot {
  double time;
  std::vector<double> field;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<std::pair<double, double>> energy;    // (t, E_h)
  std::vector<std::pair<double, double>> max_norm;  // (t, max|u|)
  std::vector<std::size_t> pcg_iters;               // per time step
};

/// Initial field at the interior nodes. Problems: (1) x^3(1-x)^3, (2)
/// 0.05 sin(2 pi x) sin(2 pi y), (3) 0.5 sin(2 pi x), (4) thresholded
/// -tanh(C/E) star profile with E = sqrt(2)*eps, (5) 0.01*(2 rand - 1)
/// from the seeded generator.
std::vector<double> initial_condition(const SimConfig& cfg);

/// b = (1+s*ht) u - ht f(u); u^{n+1} solves A x = b with zero initial guess.
PcgResult step_1d(std::span<const double> u, const FracOperator1D& op, const TauPrecond1D* precond,
                  const PotentialParams& potential, const PcgOptions& opts);
PcgResult step_2d(std::span<const double> u, const FracOperator2D& op, const TauPrecond2D* precond,
                  const PotentialParams& potential, const PcgOptions& opts);

/// E_h = -(eps^2/2) * vol * u^T(riesz u) + vol * sum F(u_i) with vol the grid
/// cell measure (hx in 1D, hx1*hx2 in 2D). The quadratic part is nonnegative.
double discrete_energy(std::span<const double> u, const FracOperator1D& op, const PotentialParams& p);
double discrete_energy(std::span<const double> u, const FracOperator2D& op, const PotentialParams& p);

/// Full run: the operator and preconditioner are built once (they do not
/// depend on time), then the stepper is iterated, recording snapshots per
/// schedule, discrete energy, max norm, and solver iteration counts.
Trajectory run_simulation(const SimConfig& cfg);

/// Mean iteration count over a run's time steps, rounded half-up.
std::size_t rounded_mean_iters(const Trajectory& t);

}  // namespace fracsolve

#endif  // FRACSOLVE_SIMULATE_HPP
