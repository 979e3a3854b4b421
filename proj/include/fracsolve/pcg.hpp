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

#ifndef FRACSOLVE_PCG_HPP
#define FRACSOLVE_PCG_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracsolve {

/// Thrown when an iterative solve breaks down (non-finite values).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

struct SolveStats {
  std::size_t iterations = 0;
  std::vector<double> relative_residuals;  // [0] is the initial ratio 1
  bool converged = false;
  double final_true_residual = 0.0;        // ||b - A x|| / ||b|| recomputed at exit
};

struct PcgOptions {
  double tol = 1e-8;
  std::size_t maxit = 10000;
};

struct PcgResult {
  std::vector<double> x;
  SolveStats stats;
};

/// Identity "preconditioner": plain CG.
struct IdentityPrecond {
  void operator()(std::span<const double> in, std::span<double> out) const {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i];
  }
};

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace detail

/// Preconditioned conjugate gradients on abstract apply callbacks with zero
/// initial guess and the relative-residual stopping rule
/// ||r^k|| / ||r^0|| < tol (Euclidean norms, recurrence residual). A final
/// true-residual check guards against drift beyond 10*tol. Non-finite values
/// abort with SolverError; running out of iterations returns converged=false.
template <class ApplyA, class ApplyPinv>
PcgResult pcg(ApplyA&& apply_a, ApplyPinv&& apply_pinv, std::span<const double> b, PcgOptions opts = {}) {
  const std::size_t n = b.size();
  PcgResult res;
  res.x.assign(n, 0.0);
  res.stats.relative_residuals.push_back(1.0);

  double norm_b = 0.0;
  for (double v : b) {
    if (!std::isfinite(v)) throw SolverError("pcg: right-hand side contains non-finite values");
    norm_b += v * v;
  }
  norm_b = std::sqrt(norm_b);
  if (norm_b == 0.0) {
    res.stats.converged = true;
    return res;
  }

  std::vector<double> r(b.begin(), b.end());  // r = b - A*0
  std::vector<double> z(n), p(n), q(n);
  apply_pinv(std::span<const double>(r), std::span<double>(z));
  p = z;
  double rho = detail::dot(r, z);

  double rel = 1.0;
  while (res.stats.iterations < opts.maxit) {
    apply_a(std::span<const double>(p), std::span<double>(q));
    const double pq = detail::dot(p, q);
    const double alpha = rho / pq;
    if (!std::isfinite(alpha)) throw SolverError("pcg: breakdown (non-finite step length)");
    for (std::size_t i = 0; i < n; ++i) {
      res.x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
    }
    ++res.stats.iterations;
    rel = detail::norm2(r) / norm_b;
    if (!std::isfinite(rel)) throw SolverError("pcg: breakdown (non-finite residual)");
    res.stats.relative_residuals.push_back(rel);
    if (rel < opts.tol) break;

    apply_pinv(std::span<const double>(r), std::span<double>(z));
    const double rho_next = detail::dot(r, z);
    if (!std::isfinite(rho_next)) throw SolverError("pcg: breakdown (non-finite inner product)");
    const double beta = rho_next / rho;
    rho = rho_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }

  // True residual at exit; recurrence drift beyond 10*tol voids convergence.
  apply_a(std::span<const double>(res.x), std::span<double>(q));
  double tr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = b[i] - q[i];
    tr += d * d;
  }
  res.stats.final_true_residual = std::sqrt(tr) / norm_b;
  res.stats.converged = rel < opts.tol && res.stats.final_true_residual < 10.0 * opts.tol;
  return res;
}

template <class ApplyA>
PcgResult cg(ApplyA&& apply_a, std::span<const double> b, PcgOptions opts = {}) {
  return pcg(std::forward<ApplyA>(apply_a), IdentityPrecond{}, b, opts);
}

}  // namespace fracsolve

#endif  // FRACSOLVE_PCG_HPP
