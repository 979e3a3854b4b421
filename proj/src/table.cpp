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

#include "fracsolve/table.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fracsolve/io.hpp"

namespace fracsolve {

void ExperimentMatrix::validate() const {
  if (dimension != 1 && dimension != 2) throw std::invalid_argument("table: dimension must be 1 or 2");
  if (dimension == 1 && alphas.empty()) throw std::invalid_argument("table: no fractional orders given");
  if (dimension == 2 && alpha_pairs.empty()) throw std::invalid_argument("table: no fractional order pairs given");
  for (double a : alphas) FracOrder check(a);
  for (const auto& [a1, a2] : alpha_pairs) {
    FracOrder check1(a1);
    FracOrder check2(a2);
  }
  if (schemes.empty()) throw std::invalid_argument("table: no schemes given");
  if (sizes.empty()) throw std::invalid_argument("table: no grid sizes given");
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    if (sizes[i] >= sizes[i + 1]) throw std::invalid_argument("table: sizes must be strictly increasing");
  }
  for (std::size_t s : sizes) {
    if (s < 3) throw std::invalid_argument("table: sizes are M+1 values and must be at least 3");
  }
  if (!run_cg && !run_pcg) throw std::invalid_argument("table: no solver mode selected");
  if (!(final_time > 0.0) || steps == 0) throw std::invalid_argument("table: invalid time grid");
  potential.validate();
}

SimConfig cell_config(const ExperimentMatrix& matrix, double alpha1, double alpha2, SchemeId scheme,
                      std::size_t size, SolverKind solver) {
  SimConfig cfg;
  cfg.dimension = matrix.dimension;
  cfg.problem = matrix.dimension == 1 ? 1 : 2;
  cfg.alpha = alpha1;
  cfg.alpha2 = alpha2;
  cfg.scheme = scheme;
  cfg.m = size - 1;
  cfg.m2 = size - 1;
  cfg.final_time = matrix.final_time;
  cfg.steps = matrix.steps;
  cfg.eps = matrix.eps;
  cfg.stabilization = matrix.stabilization;
  cfg.potential = matrix.potential;
  cfg.seed = matrix.seed;
  cfg.solver = solver;
  cfg.snapshot_times = {};
  cfg.tol = matrix.tol;
  cfg.maxit = matrix.maxit;
  return cfg;
}

namespace {

std::string make_cell_id(const TableCell& cell, int dimension) {
  std::ostringstream os;
  os << "alpha" << format_double(cell.alpha1);
  if (dimension == 2) os << "_" << format_double(cell.alpha2);
  os << "_" << scheme_name(cell.scheme) << "_M" << cell.size << "_"
     << (cell.solver == SolverKind::CG ? "cg" : "pcg");
  return os.str();
}

}  // namespace

TableResult run_table(const ExperimentMatrix& matrix, std::size_t jobs) {
  matrix.validate();
  TableResult result;
  result.matrix = matrix;

  std::vector<std::pair<double, double>> orders;
  if (matrix.dimension == 1) {
    for (double a : matrix.alphas) orders.emplace_back(a, a);
  } else {
    orders = matrix.alpha_pairs;
  }
  std::vector<SolverKind> modes;
  if (matrix.run_cg) modes.push_back(SolverKind::CG);
  if (matrix.run_pcg) modes.push_back(SolverKind::TauPCG);

  for (const auto& [a1, a2] : orders) {
    for (SchemeId scheme : matrix.schemes) {
      for (std::size_t size : matrix.sizes) {
        for (SolverKind mode : modes) {
          TableCell cell;
          cell.alpha1 = a1;
          cell.alpha2 = a2;
          cell.scheme = scheme;
          cell.size = size;
          cell.solver = mode;
          cell.cell_id = make_cell_id(cell, matrix.dimension);
          result.cells.push_back(std::move(cell));
        }
      }
    }
  }

  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, result.cells.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= result.cells.size()) return;
      TableCell& cell = result.cells[i];
      try {
        const SimConfig cfg =
            cell_config(matrix, cell.alpha1, cell.alpha2, cell.scheme, cell.size, cell.solver);
        const Trajectory traj = run_simulation(cfg);
        cell.per_step_iters = traj.pcg_iters;
        cell.mean_iters = rounded_mean_iters(traj);
      } catch (const std::exception&) {
        cell.failed = true;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return result;
}

std::vector<std::string> table_header(const TableResult& result) {
  std::vector<std::string> header;
  if (result.matrix.dimension == 1) {
    header = {"alpha", "M_plus_1"};
  } else {
    header = {"alpha1", "alpha2", "M_plus_1"};
  }
  for (SchemeId scheme : result.matrix.schemes) {
    if (result.matrix.run_cg) header.push_back(std::string(scheme_name(scheme)) + "_cg");
    if (result.matrix.run_pcg) header.push_back(std::string(scheme_name(scheme)) + "_pcg");
  }
  return header;
}

std::vector<std::vector<std::string>> table_rows(const TableResult& result) {
  auto find_cell = [&](double a1, double a2, SchemeId scheme, std::size_t size,
                       SolverKind mode) -> const TableCell* {
    for (const auto& cell : result.cells) {
      if (cell.alpha1 == a1 && cell.alpha2 == a2 && cell.scheme == scheme && cell.size == size &&
          cell.solver == mode) {
        return &cell;
      }
    }
    return nullptr;
  };

  std::vector<std::pair<double, double>> orders;
  if (result.matrix.dimension == 1) {
    for (double a : result.matrix.alphas) orders.emplace_back(a, a);
  } else {
    orders = result.matrix.alpha_pairs;
  }

  std::vector<std::vector<std::string>> rows;
  for (const auto& [a1, a2] : orders) {
    for (std::size_t size : result.matrix.sizes) {
      std::vector<std::string> row;
      row.push_back(format_double(a1));
      if (result.matrix.dimension == 2) row.push_back(format_double(a2));
      row.push_back(std::to_string(size));
      for (SchemeId scheme : result.matrix.schemes) {
        for (SolverKind mode : {SolverKind::CG, SolverKind::TauPCG}) {
          if ((mode == SolverKind::CG && !result.matrix.run_cg) ||
              (mode == SolverKind::TauPCG && !result.matrix.run_pcg)) {
            continue;
          }
          const TableCell* cell = find_cell(a1, a2, scheme, size, mode);
          row.push_back(cell == nullptr ? "" : (cell->failed ? "fail" : std::to_string(cell->mean_iters)));
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace fracsolve
