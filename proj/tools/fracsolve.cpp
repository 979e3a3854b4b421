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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracsolve/io.hpp"
#include "fracsolve/pcg.hpp"
#include "fracsolve/simulate.hpp"
#include "fracsolve/spectra.hpp"
#include "fracsolve/symbol.hpp"
#include "fracsolve/table.hpp"
#include "fracsolve/tau.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using namespace fracsolve;

SchemeId parse_scheme(const std::string& name) {
  const auto s = scheme_from_name(name);
  if (!s) throw std::invalid_argument("unknown scheme '" + name + "' (expected pq10 or pq1m1)");
  return *s;
}

std::uint64_t env_seed_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("FRACSOLVE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return fallback;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

// ---------------------------------------------------------------- weights --

struct WeightsArgs {
  double alpha = 1.5;
  std::string scheme = "pq10";
  std::int64_t n = 64;
  std::string out = "weights.csv";
};

void cmd_weights(const WeightsArgs& a) {
  if (a.n < 0) throw std::invalid_argument("weights: n must be nonnegative");
  const FracOrder alpha(a.alpha);
  const SchemeId scheme = parse_scheme(a.scheme);
  const std::size_t n = static_cast<std::size_t>(a.n);
  const auto g = gl_coeffs(alpha, n);
  const auto wv = wsgd_weights(alpha, scheme, n);
  std::vector<std::vector<std::string>> rows;
  double partial = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    partial += wv.w[k];
    rows.push_back({std::to_string(k), format_double(g[k]), format_double(wv.w[k]), format_double(partial)});
  }
  write_csv(a.out, {"k", "g_k", "omega_k", "partial_sum"}, rows);
}

// ----------------------------------------------------------------- symbol --

struct SymbolArgs {
  double alpha = 1.5;
  std::string scheme = "pq10";
  std::int64_t m = 128;
  std::string grid = "uniform";
  std::int64_t n_terms = -1;  // default: M
  std::string out = "symbol.csv";
};

void cmd_symbol(const SymbolArgs& a) {
  if (a.m < 1) throw std::invalid_argument("symbol: M must be positive");
  const FracOrder alpha(a.alpha);
  const SchemeId scheme = parse_scheme(a.scheme);
  SampleGrid grid;
  if (a.grid == "uniform") {
    grid = SampleGrid::UniformGrid;
  } else if (a.grid == "tau") {
    grid = SampleGrid::TauGrid;
  } else {
    throw std::invalid_argument("symbol: grid must be 'uniform' or 'tau'");
  }
  const std::size_t m = static_cast<std::size_t>(a.m);
  const std::size_t n_terms = a.n_terms < 0 ? m : static_cast<std::size_t>(a.n_terms);
  const SymbolFn closed{alpha, scheme, SymbolForm::ClosedForm, 0};
  const SymbolFn series{alpha, scheme, SymbolForm::CoefficientSum, n_terms};
  const auto fc = symbol_samples(closed, m, grid);
  const auto fs_ = symbol_samples(series, m, grid);
  const double denom = grid == SampleGrid::TauGrid ? static_cast<double>(m + 1) : static_cast<double>(m);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t j = 1; j <= m; ++j) {
    const double x = static_cast<double>(j) * std::numbers::pi / denom;
    rows.push_back({format_double(x), format_double(fc[j - 1]), format_double(fs_[j - 1])});
  }
  write_csv(a.out, {"x", "f_closed", "f_coeff"}, rows);
}

// -------------------------------------------------------------------- esd --

struct EsdArgs {
  double alpha = 1.5;
  std::string scheme = "pq10";
  std::int64_t m = 128;
  std::int64_t n_terms = 100000;
  std::string out = "esd.csv";
};

void cmd_esd(const EsdArgs& a) {
  if (a.m < 2) throw std::invalid_argument("esd: M must be at least 2");
  const FracOrder alpha(a.alpha);
  const SchemeId scheme = parse_scheme(a.scheme);
  const std::size_t m = static_cast<std::size_t>(a.m);
  const auto eigs = sym_eigs(dense_toeplitz(build_G(alpha, scheme, m)));
  const SymbolFn series{alpha, scheme, SymbolForm::CoefficientSum, static_cast<std::size_t>(a.n_terms)};
  const auto samples = symbol_samples(series, m, SampleGrid::UniformGrid);
  const DistributionReport rep = esd_compare(eigs, samples);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < m; ++i) {
    rows.push_back({std::to_string(i + 1), format_double(rep.sorted_eigs[i]),
                    format_double(rep.sorted_samples[i])});
  }
  write_csv(a.out, {"index", "eig", "sample"}, rows);
  std::cout << "sup_diff=" << format_double(rep.sup_diff)
            << " wasserstein1=" << format_double(rep.wasserstein1) << "\n";
}

// --------------------------------------------------------------- spectrum --

struct SpectrumArgs {
  int dim = 1;
  double alpha = 1.5;
  double alpha2 = 1.5;
  std::string scheme = "pq10";
  std::int64_t m = 128;
  std::string mode = "precond";
  double eps = 0.3;
  std::int64_t steps = 16;
  double final_time = 1.0;
  double theta = 0.8;
  double theta_c = 1.6;
  std::optional<double> s;
  std::string out = "spectrum.csv";
};

void cmd_spectrum(const SpectrumArgs& a) {
  if (a.m < 2) throw std::invalid_argument("spectrum: M must be at least 2");
  if (a.mode != "plain" && a.mode != "precond") {
    throw std::invalid_argument("spectrum: mode must be 'plain' or 'precond'");
  }
  PotentialParams pot;
  pot.theta = a.theta;
  pot.theta_c = a.theta_c;
  pot.validate();
  const double s = a.s ? *a.s : default_stabilization(pot);
  const std::size_t m = static_cast<std::size_t>(a.m);
  const double ht = a.final_time / static_cast<double>(a.steps);
  const double hx = 1.0 / static_cast<double>(m + 1);
  std::vector<double> eigs;
  if (a.dim == 1) {
    FracOperator1D op(FracOrder(a.alpha), parse_scheme(a.scheme), m, hx, ht, a.eps, s);
    eigs = a.mode == "plain" ? sym_eigs(dense_operator(op))
                             : precond_spectrum(op, TauPrecond1D::build(op));
  } else if (a.dim == 2) {
    FracOperator2D op(FracOrder(a.alpha), FracOrder(a.alpha2), parse_scheme(a.scheme), m, m, hx, hx, ht,
                      a.eps, s);
    eigs = a.mode == "plain" ? sym_eigs(dense_operator(op))
                             : precond_spectrum(op, TauPrecond2D::build(op));
  } else {
    throw std::invalid_argument("spectrum: dim must be 1 or 2");
  }
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    rows.push_back({std::to_string(i + 1), format_double(eigs[i])});
  }
  write_csv(a.out, {"index", "eigenvalue"}, rows);
}

// ------------------------------------------------------------ matvec-bench --

struct BenchArgs {
  double alpha = 1.5;
  std::vector<std::int64_t> sizes{4096, 8192, 16384, 32768, 65536};
  int reps = 9;
  std::string out = "matvec_bench.csv";
};

void cmd_bench(const BenchArgs& a) {
  std::vector<std::vector<std::string>> rows;
  for (std::int64_t size : a.sizes) {
    if (size < 2) throw std::invalid_argument("matvec-bench: M must be at least 2");
    const std::size_t m = static_cast<std::size_t>(size);
    FracOperator1D op(FracOrder(a.alpha), SchemeId::PQ10, m, 1.0 / static_cast<double>(m + 1),
                      1.0 / 16.0, 0.3, 8.0);
    OperatorWorkspace ws = op.make_workspace();
    std::vector<double> v(m, 1.0), out_vec(m);
    op.apply(v, out_vec, ws);  // warm up
    double best = 1e300;
    for (int r = 0; r < a.reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      op.apply(v, out_vec, ws);
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    rows.push_back({std::to_string(m), format_double(best)});
  }
  write_csv(a.out, {"M", "seconds_per_apply"}, rows);
}

// -------------------------------------------------------------------- run --

struct RunArgs {
  std::string config_path;
  std::optional<int> problem;
  std::optional<double> alpha, alpha2, a, b, final_time, eps, s, theta, theta_c, tol;
  std::optional<std::string> scheme, solver;
  std::optional<std::int64_t> m, m2, steps, maxit;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<double>> snapshots;
  std::string out = "out/run";
  bool out_explicit = false;
};

std::string slurp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void cmd_run(const RunArgs& a) {
  std::string text;
  bool config_sets_seed = false;
  std::string out = a.out;
  if (!a.config_path.empty()) {
    text = slurp_file(a.config_path);
    const json j = json::parse(text);
    config_sets_seed = j.is_object() && j.contains("seed");
    if (!a.out_explicit && j.is_object() && j.contains("out")) out = j["out"].get<std::string>();
  }
  SimConfig cfg = run_config_from_text(text, a.problem);
  // Environment seed is a fallback: flags and config files win.
  if (!config_sets_seed) cfg.seed = env_seed_or(cfg.seed);

  // Flags win over config values.
  if (a.alpha) cfg.alpha = *a.alpha;
  if (a.alpha2) cfg.alpha2 = *a.alpha2;
  if (a.scheme) cfg.scheme = parse_scheme(*a.scheme);
  if (a.a) cfg.domain_a = *a.a;
  if (a.b) cfg.domain_b = *a.b;
  if (a.m) cfg.m = static_cast<std::size_t>(*a.m);
  if (a.m2) cfg.m2 = static_cast<std::size_t>(*a.m2);
  if (a.m && !a.m2 && cfg.dimension == 2) cfg.m2 = static_cast<std::size_t>(*a.m);
  if (a.steps) cfg.steps = static_cast<std::size_t>(*a.steps);
  if (a.final_time) cfg.final_time = *a.final_time;
  if (a.eps) cfg.eps = *a.eps;
  if (a.s) cfg.stabilization = *a.s;
  if (a.theta) cfg.potential.theta = *a.theta;
  if (a.theta_c) cfg.potential.theta_c = *a.theta_c;
  if (a.seed) cfg.seed = *a.seed;
  if (a.snapshots) cfg.snapshot_times = *a.snapshots;
  if (a.solver) {
    if (*a.solver != "cg" && *a.solver != "pcg") throw std::invalid_argument("run: solver must be cg or pcg");
    cfg.solver = *a.solver == "cg" ? SolverKind::CG : SolverKind::TauPCG;
  }
  if (a.tol) cfg.tol = *a.tol;
  if (a.maxit) cfg.maxit = static_cast<std::size_t>(*a.maxit);

  cfg.validate();
  const Trajectory traj = run_simulation(cfg);
  const fs::path out_dir(out);
  write_trajectory(out_dir, cfg, traj);
  write_manifest(out_dir / "manifest.json", cfg);
  std::cout << "wrote " << out_dir.string() << " (mean iterations " << rounded_mean_iters(traj) << ")\n";
}

// ------------------------------------------------------------------ table --

struct TableArgs {
  std::string config_path;
  std::optional<int> dim;
  std::optional<std::vector<double>> alphas;
  std::optional<std::vector<std::string>> schemes;
  std::optional<std::vector<std::int64_t>> sizes;
  std::optional<std::vector<std::string>> modes;
  std::optional<double> eps, final_time, s, theta, theta_c;
  std::optional<std::int64_t> steps;
  std::optional<std::uint64_t> seed;
  bool large = false;
  std::size_t jobs = 2;
  std::string out = "out/table";
  bool out_explicit = false;
  bool jobs_explicit = false;
};

void apply_table_json(ExperimentMatrix& m, const json& j, bool& large) {
  reject_unknown_keys(j, {"dim", "alphas", "alpha_pairs", "schemes", "sizes", "modes", "eps", "N", "T",
                          "s", "theta", "theta_c", "seed", "large", "jobs", "out"});
  if (j.contains("alphas")) m.alphas = j["alphas"].get<std::vector<double>>();
  if (j.contains("alpha_pairs")) {
    m.alpha_pairs.clear();
    for (const auto& pair : j["alpha_pairs"]) {
      m.alpha_pairs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  if (j.contains("schemes")) {
    m.schemes.clear();
    for (const auto& s : j["schemes"]) m.schemes.push_back(parse_scheme(s.get<std::string>()));
  }
  if (j.contains("sizes")) m.sizes = j["sizes"].get<std::vector<std::size_t>>();
  if (j.contains("modes")) {
    m.run_cg = false;
    m.run_pcg = false;
    for (const auto& mode : j["modes"]) {
      const std::string name = mode.get<std::string>();
      if (name == "cg") {
        m.run_cg = true;
      } else if (name == "pcg") {
        m.run_pcg = true;
      } else {
        throw std::invalid_argument("config: modes entries must be cg or pcg");
      }
    }
  }
  if (j.contains("eps")) m.eps = j["eps"].get<double>();
  if (j.contains("N")) m.steps = j["N"].get<std::size_t>();
  if (j.contains("T")) m.final_time = j["T"].get<double>();
  if (j.contains("s")) m.stabilization = j["s"].get<double>();
  if (j.contains("theta")) m.potential.theta = j["theta"].get<double>();
  if (j.contains("theta_c")) m.potential.theta_c = j["theta_c"].get<double>();
  if (j.contains("seed")) m.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("large")) large = j["large"].get<bool>();
}

void cmd_table(const TableArgs& a) {
  json j;
  if (!a.config_path.empty()) j = load_config(a.config_path);

  int dim = 1;
  if (j.contains("dim")) dim = j["dim"].get<int>();
  if (a.dim) dim = *a.dim;
  if (dim != 1 && dim != 2) throw std::invalid_argument("table: dim must be 1 or 2");

  std::string out = a.out;
  if (!a.out_explicit && j.contains("out")) out = j["out"].get<std::string>();
  std::size_t jobs = a.jobs;
  if (!a.jobs_explicit && j.contains("jobs")) jobs = j["jobs"].get<std::size_t>();

  ExperimentMatrix matrix;
  matrix.dimension = dim;
  if (dim == 1) {
    matrix.alphas = {1.2, 1.5, 1.8};
    matrix.sizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192};
  } else {
    matrix.alpha_pairs = {{1.1, 1.3}, {1.5, 1.6}, {1.7, 1.9}, {1.1, 1.9}};
    matrix.sizes = {32, 64, 128, 256};
  }
  matrix.seed = env_seed_or(matrix.seed);

  bool large = a.large;
  if (!j.empty()) apply_table_json(matrix, j, large);

  if (a.alphas) {
    if (dim == 1) {
      matrix.alphas = *a.alphas;
    } else {
      if (a.alphas->size() % 2 != 0) {
        throw std::invalid_argument("table: 2D --alphas expects pairs (an even count of values)");
      }
      matrix.alpha_pairs.clear();
      for (std::size_t i = 0; i + 1 < a.alphas->size(); i += 2) {
        matrix.alpha_pairs.emplace_back((*a.alphas)[i], (*a.alphas)[i + 1]);
      }
    }
  }
  if (a.schemes) {
    matrix.schemes.clear();
    for (const auto& s : *a.schemes) matrix.schemes.push_back(parse_scheme(s));
  }
  if (a.sizes) {
    matrix.sizes.clear();
    for (std::int64_t s : *a.sizes) {
      if (s < 3) throw std::invalid_argument("table: sizes are M+1 values and must be at least 3");
      matrix.sizes.push_back(static_cast<std::size_t>(s));
    }
  }
  if (a.modes) {
    matrix.run_cg = false;
    matrix.run_pcg = false;
    for (const auto& mode : *a.modes) {
      if (mode == "cg") {
        matrix.run_cg = true;
      } else if (mode == "pcg") {
        matrix.run_pcg = true;
      } else {
        throw std::invalid_argument("table: modes must be cg or pcg");
      }
    }
  }
  if (a.eps) matrix.eps = *a.eps;
  if (a.steps) matrix.steps = static_cast<std::size_t>(*a.steps);
  if (a.final_time) matrix.final_time = *a.final_time;
  if (a.s) matrix.stabilization = *a.s;
  if (a.theta) matrix.potential.theta = *a.theta;
  if (a.theta_c) matrix.potential.theta_c = *a.theta_c;
  if (a.seed) matrix.seed = *a.seed;

  const std::size_t cap = dim == 1 ? 8192 : 256;
  for (std::size_t s : matrix.sizes) {
    if (s > cap && !large) {
      throw std::invalid_argument("table: size " + std::to_string(s) + " exceeds the desk-scale cap " +
                                  std::to_string(cap) + "; pass --large to run it anyway");
    }
  }

  const TableResult result = run_table(matrix, jobs);

  const fs::path out_dir(out);
  fs::create_directories(out_dir);
  write_csv(out_dir / "table.csv", table_header(result), table_rows(result));
  for (const auto& cell : result.cells) {
    const fs::path cell_dir = out_dir / cell.cell_id;
    fs::create_directories(cell_dir);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < cell.per_step_iters.size(); ++n) {
      rows.push_back({std::to_string(n + 1), std::to_string(cell.per_step_iters[n])});
    }
    write_csv(cell_dir / "iters.csv", {"step", "iterations"}, rows);
  }

  nlohmann::ordered_json manifest;
  manifest["dim"] = matrix.dimension;
  if (dim == 1) {
    manifest["alphas"] = matrix.alphas;
  } else {
    auto& pairs = manifest["alpha_pairs"] = nlohmann::ordered_json::array();
    for (const auto& [a1, a2] : matrix.alpha_pairs) pairs.push_back({a1, a2});
  }
  auto& schemes = manifest["schemes"] = nlohmann::ordered_json::array();
  for (SchemeId s : matrix.schemes) schemes.push_back(scheme_name(s));
  manifest["sizes"] = matrix.sizes;
  manifest["modes"] = [&] {
    std::vector<std::string> modes;
    if (matrix.run_cg) modes.push_back("cg");
    if (matrix.run_pcg) modes.push_back("pcg");
    return modes;
  }();
  manifest["eps"] = matrix.eps;
  manifest["N"] = matrix.steps;
  manifest["T"] = matrix.final_time;
  manifest["s"] = matrix.stabilization ? *matrix.stabilization : default_stabilization(matrix.potential);
  manifest["theta"] = matrix.potential.theta;
  manifest["theta_c"] = matrix.potential.theta_c;
  manifest["seed"] = matrix.seed;
  std::ofstream mf(out_dir / "manifest.json");
  mf << manifest.dump(2) << '\n';
  if (!mf) throw std::runtime_error("failed writing table manifest");

  bool any_failed = false;
  for (const auto& cell : result.cells) any_failed = any_failed || cell.failed;
  std::cout << "wrote " << (out_dir / "table.csv").string() << (any_failed ? " (some cells failed)" : "")
            << "\n";
  if (any_failed) throw SolverError("table: at least one cell failed to converge");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracsolve: matrix-free solvers and spectral diagnostics for the space-fractional "
               "Allen-Cahn equation with logarithmic potential"};
  app.require_subcommand(1);

  WeightsArgs wa;
  auto* weights = app.add_subcommand("weights", "Export difference weights and their partial sums");
  weights->add_option("--alpha", wa.alpha, "fractional order in (1,2)")->capture_default_str();
  weights->add_option("--scheme", wa.scheme, "pq10 or pq1m1")->capture_default_str();
  weights->add_option("--n", wa.n, "truncation index")->capture_default_str();
  weights->add_option("--out", wa.out, "output CSV path")->capture_default_str();
  weights->callback([&] { cmd_weights(wa); });

  SymbolArgs sa;
  auto* symbol = app.add_subcommand("symbol", "Sample the generating function on a grid");
  symbol->add_option("--alpha", sa.alpha, "fractional order in (1,2)")->capture_default_str();
  symbol->add_option("--scheme", sa.scheme, "pq10 or pq1m1")->capture_default_str();
  symbol->add_option("--M", sa.m, "number of sample points")->capture_default_str();
  symbol->add_option("--grid", sa.grid, "uniform or tau")->capture_default_str();
  symbol->add_option("--n-terms", sa.n_terms, "series truncation (default: M)")->capture_default_str();
  symbol->add_option("--out", sa.out, "output CSV path")->capture_default_str();
  symbol->callback([&] { cmd_symbol(sa); });

  EsdArgs ea;
  auto* esd = app.add_subcommand("esd", "Sorted eigenvalues of G against sorted symbol samples");
  esd->add_option("--alpha", ea.alpha, "fractional order in (1,2)")->capture_default_str();
  esd->add_option("--scheme", ea.scheme, "pq10 or pq1m1")->capture_default_str();
  esd->add_option("--M", ea.m, "matrix dimension (dense oracle, <= 4096)")->capture_default_str();
  esd->add_option("--n-terms", ea.n_terms, "series truncation for the samples")->capture_default_str();
  esd->add_option("--out", ea.out, "output CSV path")->capture_default_str();
  esd->callback([&] { cmd_esd(ea); });

  SpectrumArgs pa;
  auto* spectrum = app.add_subcommand("spectrum", "Dense spectrum of A or of the preconditioned matrix");
  spectrum->add_option("--dim", pa.dim, "1 or 2")->capture_default_str();
  spectrum->add_option("--alpha", pa.alpha, "fractional order in (1,2)")->capture_default_str();
  spectrum->add_option("--alpha2", pa.alpha2, "second-axis order (2D)")->capture_default_str();
  spectrum->add_option("--scheme", pa.scheme, "pq10 or pq1m1")->capture_default_str();
  spectrum->add_option("--M", pa.m, "interior grid size per axis")->capture_default_str();
  spectrum->add_option("--mode", pa.mode, "plain or precond")->capture_default_str();
  spectrum->add_option("--eps", pa.eps, "interface parameter")->capture_default_str();
  spectrum->add_option("--N", pa.steps, "time steps (sets ht = T/N)")->capture_default_str();
  spectrum->add_option("--T", pa.final_time, "final time")->capture_default_str();
  spectrum->add_option("--theta", pa.theta, "potential theta")->capture_default_str();
  spectrum->add_option("--theta-c", pa.theta_c, "potential theta_c")->capture_default_str();
  double spectrum_s = 0.0;
  spectrum->add_option("--s", spectrum_s, "stabilization (default: derived from the potential)");
  spectrum->add_option("--out", pa.out, "output CSV path")->capture_default_str();
  spectrum->callback([&] {
    if (spectrum->count("--s") > 0) pa.s = spectrum_s;
    cmd_spectrum(pa);
  });

  BenchArgs ba;
  auto* bench = app.add_subcommand("matvec-bench", "Time the matrix-free operator application");
  bench->add_option("--alpha", ba.alpha, "fractional order in (1,2)")->capture_default_str();
  bench->add_option("--M", ba.sizes, "grid sizes to time")->capture_default_str();
  bench->add_option("--reps", ba.reps, "repetitions (best-of)")->capture_default_str();
  bench->add_option("--out", ba.out, "output CSV path")->capture_default_str();
  bench->callback([&] { cmd_bench(ba); });

  RunArgs ra;
  auto* run = app.add_subcommand("run", "Run one simulation and write its trajectory");
  run->add_option("--config", ra.config_path, "JSON config (flags win over config values)");
  int run_problem = 0;
  double run_alpha = 0, run_alpha2 = 0, run_a = 0, run_b = 0, run_T = 0, run_eps = 0, run_s = 0,
         run_theta = 0, run_theta_c = 0, run_tol = 0;
  std::string run_scheme, run_solver;
  std::int64_t run_m = 0, run_m2 = 0, run_n = 0, run_maxit = 0;
  std::uint64_t run_seed = 0;
  std::vector<double> run_snapshots;
  run->add_option("--problem", run_problem, "problem id 1..5 (sets the defaults)");
  run->add_option("--alpha", run_alpha, "fractional order in (1,2)");
  run->add_option("--alpha2", run_alpha2, "second-axis order (2D)");
  run->add_option("--scheme", run_scheme, "pq10 or pq1m1");
  run->add_option("--a", run_a, "domain left endpoint");
  run->add_option("--b", run_b, "domain right endpoint");
  run->add_option("--M", run_m, "interior grid size (axis 1)");
  run->add_option("--M2", run_m2, "interior grid size (axis 2)");
  run->add_option("--N", run_n, "time steps");
  run->add_option("--T", run_T, "final time");
  run->add_option("--eps", run_eps, "interface parameter");
  run->add_option("--s", run_s, "stabilization constant");
  run->add_option("--theta", run_theta, "potential theta");
  run->add_option("--theta-c", run_theta_c, "potential theta_c");
  run->add_option("--seed", run_seed, "random seed (env FRACSOLVE_SEED is the fallback)");
  run->add_option("--snapshots", run_snapshots, "snapshot times (nearest step)");
  run->add_option("--solver", run_solver, "cg or pcg");
  run->add_option("--tol", run_tol, "relative residual tolerance");
  run->add_option("--maxit", run_maxit, "iteration cap per solve");
  run->add_option("--out", ra.out, "output directory")->capture_default_str();
  run->callback([&] {
    if (run->count("--problem")) ra.problem = run_problem;
    if (run->count("--alpha")) ra.alpha = run_alpha;
    if (run->count("--alpha2")) ra.alpha2 = run_alpha2;
    if (run->count("--scheme")) ra.scheme = run_scheme;
    if (run->count("--a")) ra.a = run_a;
    if (run->count("--b")) ra.b = run_b;
    if (run->count("--M")) ra.m = run_m;
    if (run->count("--M2")) ra.m2 = run_m2;
    if (run->count("--N")) ra.steps = run_n;
    if (run->count("--T")) ra.final_time = run_T;
    if (run->count("--eps")) ra.eps = run_eps;
    if (run->count("--s")) ra.s = run_s;
    if (run->count("--theta")) ra.theta = run_theta;
    if (run->count("--theta-c")) ra.theta_c = run_theta_c;
    if (run->count("--seed")) ra.seed = run_seed;
    if (run->count("--snapshots")) ra.snapshots = run_snapshots;
    if (run->count("--solver")) ra.solver = run_solver;
    if (run->count("--tol")) ra.tol = run_tol;
    if (run->count("--maxit")) ra.maxit = run_maxit;
    ra.out_explicit = run->count("--out") > 0;
    cmd_run(ra);
  });

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Iteration-count sweep over orders, schemes, and sizes");
  table->add_option("--config", ta.config_path, "JSON config (flags win over config values)");
  int table_dim = 0;
  std::vector<double> table_alphas;
  std::vector<std::string> table_schemes, table_modes;
  std::vector<std::int64_t> table_sizes;
  double table_eps = 0, table_T = 0, table_s = 0, table_theta = 0, table_theta_c = 0;
  std::int64_t table_n = 0;
  std::uint64_t table_seed = 0;
  table->add_option("--dim", table_dim, "1 or 2");
  table->add_option("--alphas", table_alphas, "orders (1D) or flattened pairs (2D)");
  table->add_option("--schemes", table_schemes, "subset of {pq10, pq1m1}");
  table->add_option("--sizes", table_sizes, "M+1 values, strictly increasing");
  table->add_option("--modes", table_modes, "subset of {cg, pcg}");
  table->add_option("--eps", table_eps, "interface parameter");
  table->add_option("--N", table_n, "time steps");
  table->add_option("--T", table_T, "final time");
  table->add_option("--s", table_s, "stabilization constant");
  table->add_option("--theta", table_theta, "potential theta");
  table->add_option("--theta-c", table_theta_c, "potential theta_c");
  table->add_option("--seed", table_seed, "random seed");
  table->add_flag("--large", ta.large, "allow sizes beyond the desk-scale cap");
  table->add_option("--jobs", ta.jobs, "concurrent cells")->capture_default_str();
  table->add_option("--out", ta.out, "output directory")->capture_default_str();
  table->callback([&] {
    if (table->count("--dim")) ta.dim = table_dim;
    if (table->count("--alphas")) ta.alphas = table_alphas;
    if (table->count("--schemes")) ta.schemes = table_schemes;
    if (table->count("--sizes")) ta.sizes = table_sizes;
    if (table->count("--modes")) ta.modes = table_modes;
    if (table->count("--eps")) ta.eps = table_eps;
    if (table->count("--N")) ta.steps = table_n;
    if (table->count("--T")) ta.final_time = table_T;
    if (table->count("--s")) ta.s = table_s;
    if (table->count("--theta")) ta.theta = table_theta;
    if (table->count("--theta-c")) ta.theta_c = table_theta_c;
    if (table->count("--seed")) ta.seed = table_seed;
    ta.out_explicit = table->count("--out") > 0;
    ta.jobs_explicit = table->count("--jobs") > 0;
    cmd_table(ta);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const fracsolve::SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
