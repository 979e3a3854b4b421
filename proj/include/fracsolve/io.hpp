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

#ifndef FRACSOLVE_IO_HPP
#define FRACSOLVE_IO_HPP

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fracsolve/simulate.hpp"

namespace fracsolve {

/// 17 significant digits: round-trip exact for 64-bit floats.
std::string format_double(double v);

/// CSV with a header row; every numeric cell goes through format_double.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Raw row-major little-endian 64-bit floats.
void write_f64(const std::filesystem::path& path, std::span<const double> values);
std::vector<double> read_f64(const std::filesystem::path& path);

/// Trajectory outputs under dir: energy.csv (t,E), maxval.csv (t,max|u|),
/// iters.csv (step,iterations), and per-snapshot u_t<label>.f64 with a JSON
/// sidecar {M1, M2, time, alpha, scheme}.
void write_trajectory(const std::filesystem::path& dir, const SimConfig& cfg, const Trajectory& traj);

/// manifest.json with the fully resolved configuration.
void write_manifest(const std::filesystem::path& path, const SimConfig& cfg);

/// Benchmark defaults per problem id (grid, time horizon, eps, snapshots).
SimConfig run_defaults_for_problem(int problem);

/// Resolved run configuration: problem-specific defaults overlaid with a JSON
/// object (text form; may be empty). An explicit problem id wins over the
/// config's. Unknown keys are rejected by name; callers layer command-line
/// overrides on top of the result.
SimConfig run_config_from_text(const std::string& json_text, std::optional<int> problem_override);

}  // namespace fracsolve

#endif  // FRACSOLVE_IO_HPP
