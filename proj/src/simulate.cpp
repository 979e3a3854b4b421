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

#include "fracsolve/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace fracsolve {

double SimConfig::stabilization_value() const {
  if (stabilization) return *stabilization;
  return default_stabilization(potential);
}

void SimConfig::validate() const {
  if (dimension != 1 && dimension != 2) throw std::invalid_argument("config: dimension must be 1 or 2");
  FracOrder check_alpha(alpha);
  if (dimension == 2) FracOrder check_alpha2(alpha2);
  if (!(domain_b > domain_a)) throw std::invalid_argument("config: domain must satisfy a < b");
  if (m < 2 || (dimension == 2 && m2 < 2)) throw std::invalid_argument("config: M must be at least 2");
  if (!(final_time > 0.0)) throw std::invalid_argument("config: final time must be positive");
  if (eps < 0.0) throw std::invalid_argument("config: eps must be nonnegative");
  if (stabilization && *stabilization < 0.0) throw std::invalid_argument("config: s must be nonnegative");
  potential.validate();
  if (problem < 1 || problem > 5) throw std::invalid_argument("config: problem id must be 1..5");
  const bool problem_is_2d = (problem == 2 || problem == 4 || problem == 5);
  if (problem_is_2d != (dimension == 2)) {
    throw std::invalid_argument("config: problem id and dimension disagree (problems 1,3 are 1D; 2,4,5 are 2D)");
  }
  if (!(tol > 0.0) || maxit == 0) throw std::invalid_argument("config: invalid solver controls");
}

namespace {

// Uniform doubles in [0,1) from the top 53 bits; keeps streams identical
// across standard libraries.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double star_level(double x, double y) {
  const double c1 = std::max(std::abs(2.0 * x - 1.0), std::abs(y - 0.5));
  const double c2 = std::max(std::abs(x - 0.5), std::abs(2.0 * y - 1.0));
  return std::min(c1, c2) - 0.2;
}

}  // namespace

std::vector<double> initial_condition(const SimConfig& cfg) {
  cfg.validate();
  const double a = cfg.domain_a;
  const double h1 = cfg.hx();
  std::vector<double> u(cfg.field_size());
  switch (cfg.problem) {
    case 1:
      for (std::size_t i = 0; i < cfg.m; ++i) {
        const double x = a + static_cast<double>(i + 1) * h1;
        u[i] = x * x * x * (1.0 - x) * (1.0 - x) * (1.0 - x);
      }
      break;
    case 3:
      for (std::size_t i = 0; i < cfg.m; ++i) {
        const double x = a + static_cast<double>(i + 1) * h1;
        u[i] = 0.5 * std::sin(2.0 * std::numbers::pi * x);
      }
      break;
    case 2: {
      const double h2 = cfg.hx2();
      for (std::size_t i1 = 0; i1 < cfg.m; ++i1) {
        const double x = a + static_cast<double>(i1 + 1) * h1;
        for (std::size_t i2 = 0; i2 < cfg.m2; ++i2) {
          const double y = a + static_cast<double>(i2 + 1) * h2;
          u[i1 * cfg.m2 + i2] =
              0.05 * std::sin(2.0 * std::numbers::pi * x) * std::sin(2.0 * std::numbers::pi * y);
        }
      }
      break;
    }
    case 4: {
      const double h2 = cfg.hx2();
      const double e = std::numbers::sqrt2 * cfg.eps;
      for (std::size_t i1 = 0; i1 < cfg.m; ++i1) {
        const double x = a + static_cast<double>(i1 + 1) * h1;
        for (std::size_t i2 = 0; i2 < cfg.m2; ++i2) {
          const double y = a + static_cast<double>(i2 + 1) * h2;
          const double v = -std::tanh(star_level(x, y) / e);
          u[i1 * cfg.m2 + i2] = std::clamp(v, -0.99, 0.99);
        }
      }
      break;
    }
    case 5: {
      std::mt19937_64 rng(cfg.seed);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = 0.01 * (2.0 * uniform01(rng) - 1.0);
      break;
    }
    default:
      throw std::invalid_argument("initial_condition: unknown problem id");
  }
  return u;
}

namespace {

std::vector<double> stepper_rhs(std::span<const double> u, double idc, double ht,
                                const PotentialParams& potential) {
  std::vector<double> b(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) b[i] = idc * u[i] - ht * potential_f(u[i], potential);
  return b;
}

template <class Op, class Precond>
PcgResult step_impl(std::span<const double> u, const Op& op, const Precond* precond,
                    const PotentialParams& potential, const PcgOptions& opts) {
  if (u.size() != op.dim()) throw std::invalid_argument("step: field/operator dimension mismatch");
  const std::vector<double> b = stepper_rhs(u, op.identity_coeff(), op.ht(), potential);
  OperatorWorkspace op_ws = op.make_workspace();
  auto apply_a = [&](std::span<const double> in, std::span<double> out) { op.apply(in, out, op_ws); };
  if (precond != nullptr) {
    PrecondWorkspace p_ws = precond->make_workspace();
    auto apply_pinv = [&](std::span<const double> in, std::span<double> out) {
      precond->apply_inverse(in, out, p_ws);
    };
    return pcg(apply_a, apply_pinv, b, opts);
  }
  return cg(apply_a, b, opts);
}

}  // namespace

PcgResult step_1d(std::span<const double> u, const FracOperator1D& op, const TauPrecond1D* precond,
                  const PotentialParams& potential, const PcgOptions& opts) {
  return step_impl(u, op, precond, potential, opts);
}

PcgResult step_2d(std::span<const double> u, const FracOperator2D& op, const TauPrecond2D* precond,
                  const PotentialParams& potential, const PcgOptions& opts) {
  return step_impl(u, op, precond, potential, opts);
}

namespace {

template <class Op>
double energy_impl(std::span<const double> u, const Op& op, const PotentialParams& p, double volume) {
  OperatorWorkspace ws = op.make_workspace();
  std::vector<double> lu(u.size());
  op.apply_riesz(u, std::span<double>(lu), ws);
  double quad = 0.0, well = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    quad += u[i] * lu[i];
    well += potential_F(u[i], p);
  }
  const double e2 = op.eps() * op.eps();
  return -0.5 * e2 * volume * quad + volume * well;
}

}  // namespace

double discrete_energy(std::span<const double> u, const FracOperator1D& op, const PotentialParams& p) {
  return energy_impl(u, op, p, op.hx());
}

double discrete_energy(std::span<const double> u, const FracOperator2D& op, const PotentialParams& p) {
  return energy_impl(u, op, p, op.hx1() * op.hx2());
}

namespace {

double max_abs(std::span<const double> u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

// Nearest time-step index for each requested snapshot time (ties go down).
std::set<std::size_t> snapshot_steps(const SimConfig& cfg) {
  std::set<std::size_t> idx;
  std::vector<double> times = cfg.snapshot_times;
  if (times.empty()) times = {0.0, cfg.final_time};
  for (double t : times) {
    const double frac = std::clamp(t / cfg.final_time, 0.0, 1.0);
    idx.insert(static_cast<std::size_t>(std::llround(frac * static_cast<double>(cfg.steps))));
  }
  return idx;
}

template <class Op, class Precond>
Trajectory run_impl(const SimConfig& cfg, const Op& op, const Precond* precond) {
  const double ht = cfg.ht();
  const PcgOptions opts{cfg.tol, cfg.maxit};
  const std::set<std::size_t> snaps = snapshot_steps(cfg);

  std::vector<double> u = initial_condition(cfg);
  Trajectory traj;
  traj.energy.reserve(cfg.steps + 1);
  traj.max_norm.reserve(cfg.steps + 1);
  traj.energy.emplace_back(0.0, discrete_energy(u, op, cfg.potential));
  traj.max_norm.emplace_back(0.0, max_abs(u));
  if (snaps.count(0)) traj.snapshots.push_back({0.0, u});

  for (std::size_t n = 0; n < cfg.steps; ++n) {
    PcgResult res = step_impl(std::span<const double>(u), op, precond, cfg.potential, opts);
    if (!res.stats.converged) {
      throw SolverError("run: solver did not reach tolerance at time step " + std::to_string(n + 1));
    }
    u = std::move(res.x);
    const double t = static_cast<double>(n + 1) * ht;
    traj.pcg_iters.push_back(res.stats.iterations);
    traj.energy.emplace_back(t, discrete_energy(u, op, cfg.potential));
    traj.max_norm.emplace_back(t, max_abs(u));
    if (snaps.count(n + 1)) traj.snapshots.push_back({t, u});
  }
  return traj;
}

}  // namespace

Trajectory run_simulation(const SimConfig& cfg) {
  cfg.validate();
  const double s = cfg.stabilization_value();
  // With zero steps nothing is solved; any positive ht builds a valid operator
  // for the initial energy evaluation.
  const double ht = cfg.steps > 0 ? cfg.ht() : 1.0;
  if (cfg.dimension == 1) {
    FracOperator1D op(FracOrder(cfg.alpha), cfg.scheme, cfg.m, cfg.hx(), ht, cfg.eps, s);
    if (cfg.solver == SolverKind::TauPCG) {
      TauPrecond1D precond = TauPrecond1D::build(op);
      return run_impl(cfg, op, &precond);
    }
    return run_impl(cfg, op, static_cast<const TauPrecond1D*>(nullptr));
  }
  FracOperator2D op(FracOrder(cfg.alpha), FracOrder(cfg.alpha2), cfg.scheme, cfg.m, cfg.m2, cfg.hx(),
                    cfg.hx2(), ht, cfg.eps, s);
  if (cfg.solver == SolverKind::TauPCG) {
    TauPrecond2D precond = TauPrecond2D::build(op);
    return run_impl(cfg, op, &precond);
  }
  return run_impl(cfg, op, static_cast<const TauPrecond2D*>(nullptr));
}

std::size_t rounded_mean_iters(const Trajectory& t) {
  if (t.pcg_iters.empty()) return 0;
  double sum = 0.0;
  for (std::size_t it : t.pcg_iters) sum += static_cast<double>(it);
  return static_cast<std::size_t>(std::llround(sum / static_cast<double>(t.pcg_iters.size())));
}

}  // namespace fracsolve
