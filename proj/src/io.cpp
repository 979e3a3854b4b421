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

#include "fracsolve/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fracsolve {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

namespace {

std::uint64_t to_little_endian_bits(double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  if constexpr (std::endian::native == std::endian::big) {
    bits = __builtin_bswap64(bits);
  }
  return bits;
}

double from_little_endian_bits(std::uint64_t bits) {
  if constexpr (std::endian::native == std::endian::big) {
    bits = __builtin_bswap64(bits);
  }
  return std::bit_cast<double>(bits);
}

}  // namespace

void write_f64(const std::filesystem::path& path, std::span<const double> values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (double v : values) {
    const std::uint64_t bits = to_little_endian_bits(v);
    out.write(reinterpret_cast<const char*>(&bits), sizeof(bits));
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::vector<double> read_f64(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<double> values;
  std::uint64_t bits = 0;
  while (in.read(reinterpret_cast<char*>(&bits), sizeof(bits))) {
    values.push_back(from_little_endian_bits(bits));
  }
  return values;
}

namespace {

std::string time_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

nlohmann::ordered_json config_json(const SimConfig& cfg) {
  nlohmann::ordered_json j;
  j["problem"] = cfg.problem;
  j["dimension"] = cfg.dimension;
  j["alpha"] = cfg.alpha;
  if (cfg.dimension == 2) j["alpha2"] = cfg.alpha2;
  j["scheme"] = scheme_name(cfg.scheme);
  j["a"] = cfg.domain_a;
  j["b"] = cfg.domain_b;
  j["M"] = cfg.m;
  if (cfg.dimension == 2) j["M2"] = cfg.m2;
  j["T"] = cfg.final_time;
  j["N"] = cfg.steps;
  j["eps"] = cfg.eps;
  j["s"] = cfg.stabilization_value();
  j["theta"] = cfg.potential.theta;
  j["theta_c"] = cfg.potential.theta_c;
  j["clamp_delta"] = cfg.potential.clamp_delta;
  j["seed"] = cfg.seed;
  j["solver"] = cfg.solver == SolverKind::TauPCG ? "pcg" : "cg";
  j["tol"] = cfg.tol;
  j["maxit"] = cfg.maxit;
  j["snapshot_times"] = cfg.snapshot_times;
  return j;
}

}  // namespace

void write_trajectory(const std::filesystem::path& dir, const SimConfig& cfg, const Trajectory& traj) {
  std::filesystem::create_directories(dir);

  std::vector<std::vector<std::string>> rows;
  rows.reserve(traj.energy.size());
  for (const auto& [t, e] : traj.energy) rows.push_back({format_double(t), format_double(e)});
  write_csv(dir / "energy.csv", {"t", "E"}, rows);

  rows.clear();
  for (const auto& [t, m] : traj.max_norm) rows.push_back({format_double(t), format_double(m)});
  write_csv(dir / "maxval.csv", {"t", "max_abs_u"}, rows);

  rows.clear();
  for (std::size_t n = 0; n < traj.pcg_iters.size(); ++n) {
    rows.push_back({std::to_string(n + 1), std::to_string(traj.pcg_iters[n])});
  }
  write_csv(dir / "iters.csv", {"step", "iterations"}, rows);

  for (const auto& snap : traj.snapshots) {
    const std::string label = time_label(snap.time);
    write_f64(dir / ("u_t" + label + ".f64"), snap.field);
    nlohmann::ordered_json meta;
    meta["M1"] = cfg.m;
    meta["M2"] = cfg.dimension == 2 ? cfg.m2 : std::size_t{1};
    meta["time"] = snap.time;
    meta["alpha"] = cfg.alpha;
    if (cfg.dimension == 2) meta["alpha2"] = cfg.alpha2;
    meta["scheme"] = scheme_name(cfg.scheme);
    std::ofstream out(dir / ("u_t" + label + ".json"));
    out << meta.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing snapshot sidecar");
  }
}

void write_manifest(const std::filesystem::path& path, const SimConfig& cfg) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << config_json(cfg).dump(2) << '\n';
}

SimConfig run_defaults_for_problem(int problem) {
  SimConfig cfg;
  cfg.problem = problem;
  switch (problem) {
    case 1:
      cfg.dimension = 1;
      cfg.m = 255;
      cfg.steps = 16;
      cfg.final_time = 1.0;
      cfg.eps = 0.3;
      break;
    case 2:
      cfg.dimension = 2;
      cfg.m = cfg.m2 = 63;
      cfg.steps = 16;
      cfg.final_time = 1.0;
      cfg.eps = 0.3;
      break;
    case 3:
      cfg.dimension = 1;
      cfg.m = 256;
      cfg.steps = 128;
      cfg.final_time = 12.0;
      cfg.eps = 0.02;
      break;
    case 4:
    case 5:
      // The labeled output times run to t=60 with step 0.06.
      cfg.dimension = 2;
      cfg.m = cfg.m2 = 128;
      cfg.steps = 1000;
      cfg.final_time = 60.0;
      cfg.eps = 0.02;
      cfg.snapshot_times = {0.06, 19.98, 40.02, 60.0};
      break;
    default:
      throw std::invalid_argument("run: problem id must be 1..5");
  }
  return cfg;
}

namespace {

void apply_run_json(SimConfig& cfg, const nlohmann::json& j) {
  static constexpr const char* kAllowed[] = {"problem", "alpha", "alpha2", "scheme", "a", "b",
                                             "M", "M2", "N", "T", "eps", "s", "theta", "theta_c",
                                             "clamp_delta", "seed", "snapshot_times", "solver",
                                             "tol", "maxit", "out"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool known = false;
    for (const char* a : kAllowed) known = known || key == a;
    if (!known) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
  if (j.contains("alpha2")) cfg.alpha2 = j["alpha2"].get<double>();
  if (j.contains("scheme")) {
    const auto scheme = scheme_from_name(j["scheme"].get<std::string>());
    if (!scheme) throw std::invalid_argument("config: scheme must be pq10 or pq1m1");
    cfg.scheme = *scheme;
  }
  if (j.contains("a")) cfg.domain_a = j["a"].get<double>();
  if (j.contains("b")) cfg.domain_b = j["b"].get<double>();
  if (j.contains("M")) cfg.m = j["M"].get<std::size_t>();
  if (j.contains("M2")) cfg.m2 = j["M2"].get<std::size_t>();
  if (j.contains("N")) cfg.steps = j["N"].get<std::size_t>();
  if (j.contains("T")) cfg.final_time = j["T"].get<double>();
  if (j.contains("eps")) cfg.eps = j["eps"].get<double>();
  if (j.contains("s")) cfg.stabilization = j["s"].get<double>();
  if (j.contains("theta")) cfg.potential.theta = j["theta"].get<double>();
  if (j.contains("theta_c")) cfg.potential.theta_c = j["theta_c"].get<double>();
  if (j.contains("clamp_delta")) cfg.potential.clamp_delta = j["clamp_delta"].get<double>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("snapshot_times")) cfg.snapshot_times = j["snapshot_times"].get<std::vector<double>>();
  if (j.contains("solver")) {
    const std::string solver = j["solver"].get<std::string>();
    if (solver != "cg" && solver != "pcg") throw std::invalid_argument("config: solver must be cg or pcg");
    cfg.solver = solver == "cg" ? SolverKind::CG : SolverKind::TauPCG;
  }
  if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
  if (j.contains("maxit")) cfg.maxit = j["maxit"].get<std::size_t>();
}

}  // namespace

SimConfig run_config_from_text(const std::string& json_text, std::optional<int> problem_override) {
  nlohmann::json j = nlohmann::json::object();
  if (!json_text.empty()) {
    j = nlohmann::json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      throw std::invalid_argument("config: not a JSON object");
    }
  }
  int problem = 1;
  if (j.contains("problem")) problem = j["problem"].get<int>();
  if (problem_override) problem = *problem_override;
  SimConfig cfg = run_defaults_for_problem(problem);
  apply_run_json(cfg, j);
  cfg.problem = problem;
  return cfg;
}

}  // namespace fracsolve
