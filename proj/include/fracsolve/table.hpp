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

#ifndef FRACSOLVE_TABLE_HPP
#define FRACSOLVE_TABLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fracsolve/potential.hpp"
#include "fracsolve/simulate.hpp"
#include "fracsolve/weights.hpp"

namespace fracsolve {

/// Sweep over fractional orders, schemes, grid sizes, and solver modes,
/// running the full N-step benchmark simulation per cell (problem 1 in 1D,
/// problem 2 in 2D) and recording the rounded mean iteration count.
struct ExperimentMatrix {
  int dimension = 1;
  std::vector<double> alphas;                            // 1D
  std::vector<std::pair<double, double>> alpha_pairs;    // 2D
  std::vector<SchemeId> schemes{SchemeId::PQ10, SchemeId::PQ1M1};
  std::vector<std::size_t> sizes;                        // M+1 values, strictly increasing
  bool run_cg = true;
  bool run_pcg = true;
  double eps = 0.3;
  double final_time = 1.0;
  std::size_t steps = 16;
  std::optional<double> stabilization;
  PotentialParams potential;
  std::uint64_t seed = 12345;
  double tol = 1e-8;
  std::size_t maxit = 10000;

  void validate() const;
};

struct TableCell {
  double alpha1 = 0.0;
  double alpha2 = 0.0;  // unused in 1D
  SchemeId scheme = SchemeId::PQ10;
  std::size_t size = 0;  // M+1
  SolverKind solver = SolverKind::CG;
  bool failed = false;
  std::size_t mean_iters = 0;
  std::vector<std::size_t> per_step_iters;
  std::string cell_id;
};

struct TableResult {
  ExperimentMatrix matrix;
  std::vector<TableCell> cells;  // deterministic order: alpha x scheme x size x mode
};

/// Cells run concurrently up to `jobs` workers; each cell owns its state.
TableResult run_table(const ExperimentMatrix& matrix, std::size_t jobs = 1);

/// SimConfig of one cell of the sweep (exposed for diagnostics and tests).
SimConfig cell_config(const ExperimentMatrix& matrix, double alpha1, double alpha2, SchemeId scheme,
                      std::size_t size, SolverKind solver);

/// Rows mirroring the benchmark table layout: one row per (alpha, M+1) with
/// cg/pcg columns per scheme ("fail" for cells whose solve broke down, empty
/// for modes not run).
std::vector<std::vector<std::string>> table_rows(const TableResult& result);
std::vector<std::string> table_header(const TableResult& result);

}  // namespace fracsolve

#endif  // FRACSOLVE_TABLE_HPP
