#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "fracsolve/io.hpp"
#include "fracsolve/simulate.hpp"
#include "fracsolve/table.hpp"

using namespace fracsolve;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("fracsolve_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SimConfig tiny_p5() {
  SimConfig cfg;
  cfg.dimension = 2;
  cfg.problem = 5;
  cfg.alpha = 1.5;
  cfg.alpha2 = 1.5;
  cfg.m = 16;
  cfg.m2 = 16;
  cfg.final_time = 0.24;
  cfg.steps = 4;
  cfg.eps = 0.02;
  cfg.seed = 4242;
  cfg.snapshot_times = {0.0, 0.12, 0.24};
  return cfg;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("doubles survive the 17-digit round trip") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const double v =
        std::ldexp(2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0, static_cast<int>(rng() % 41) - 20);
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("f64 files round-trip bit-exactly") {
  const fs::path dir = temp_dir("f64");
  std::vector<double> values{0.0, -1.5, 3.14159, 1e-300, -2e300, 0.1};
  write_f64(dir / "x.f64", values);
  CHECK(read_f64(dir / "x.f64") == values);
  CHECK(fs::file_size(dir / "x.f64") == values.size() * 8);
  fs::remove_all(dir);
}

TEST_CASE("trajectory outputs are deterministic per seed and sensitive to it") {
  const SimConfig cfg = tiny_p5();
  const fs::path d1 = temp_dir("run1");
  const fs::path d2 = temp_dir("run2");
  write_trajectory(d1, cfg, run_simulation(cfg));
  write_trajectory(d2, cfg, run_simulation(cfg));
  for (const char* name : {"energy.csv", "maxval.csv", "iters.csv", "u_t0.f64", "u_t0.24.f64"}) {
    CAPTURE(name);
    CHECK(slurp(d1 / name) == slurp(d2 / name));
  }

  SimConfig other = cfg;
  other.seed = 999;
  const fs::path d3 = temp_dir("run3");
  write_trajectory(d3, other, run_simulation(other));
  CHECK(slurp(d1 / "u_t0.f64") != slurp(d3 / "u_t0.f64"));
  fs::remove_all(d1);
  fs::remove_all(d2);
  fs::remove_all(d3);
}

TEST_CASE("csv files carry headers; sidecars carry the grid metadata") {
  const SimConfig cfg = tiny_p5();
  const fs::path dir = temp_dir("meta");
  write_trajectory(dir, cfg, run_simulation(cfg));
  const std::string energy = slurp(dir / "energy.csv");
  CHECK(energy.rfind("t,E\n", 0) == 0);
  const std::string iters = slurp(dir / "iters.csv");
  CHECK(iters.rfind("step,iterations\n", 0) == 0);
  const std::string sidecar = slurp(dir / "u_t0.json");
  CHECK(sidecar.find("\"M1\": 16") != std::string::npos);
  CHECK(sidecar.find("\"scheme\": \"pq10\"") != std::string::npos);
  write_manifest(dir / "manifest.json", cfg);
  const std::string manifest = slurp(dir / "manifest.json");
  CHECK(manifest.find("\"problem\": 5") != std::string::npos);
  CHECK(manifest.find("\"seed\": 4242") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("run config: defaults per problem, json overlay, unknown keys named") {
  const SimConfig p4 = run_defaults_for_problem(4);
  CHECK(p4.dimension == 2);
  CHECK(p4.m == 128);
  CHECK(p4.steps == 1000);
  CHECK(p4.final_time == 60.0);
  CHECK(p4.snapshot_times == std::vector<double>{0.06, 19.98, 40.02, 60.0});
  CHECK_THROWS_AS(run_defaults_for_problem(6), std::invalid_argument);

  const SimConfig cfg = run_config_from_text(R"({"problem": 3, "alpha": 1.8, "M": 64, "solver": "cg"})",
                                             std::nullopt);
  CHECK(cfg.problem == 3);
  CHECK(cfg.alpha == 1.8);
  CHECK(cfg.m == 64);
  CHECK(cfg.steps == 128);  // problem-3 default retained
  CHECK(cfg.solver == SolverKind::CG);

  // An explicit problem id wins over the config's.
  const SimConfig forced = run_config_from_text(R"({"problem": 3})", 1);
  CHECK(forced.problem == 1);
  CHECK(forced.eps == 0.3);

  CHECK_THROWS_WITH_AS(run_config_from_text(R"({"alhpa": 1.5})", std::nullopt),
                       doctest::Contains("alhpa"), std::invalid_argument);
  CHECK_THROWS_AS(run_config_from_text("[1,2]", std::nullopt), std::invalid_argument);
}

TEST_CASE("table runner produces the benchmark layout and parallel runs agree") {
  ExperimentMatrix matrix;
  matrix.dimension = 1;
  matrix.alphas = {1.5};
  matrix.schemes = {SchemeId::PQ10};
  matrix.sizes = {16, 32};
  matrix.run_cg = true;
  matrix.run_pcg = true;
  const TableResult serial = run_table(matrix, 1);
  const TableResult parallel = run_table(matrix, 2);
  REQUIRE(serial.cells.size() == 4);
  for (std::size_t i = 0; i < serial.cells.size(); ++i) {
    CHECK(serial.cells[i].mean_iters == parallel.cells[i].mean_iters);
    CHECK_FALSE(serial.cells[i].failed);
    CHECK(serial.cells[i].cell_id == parallel.cells[i].cell_id);
  }
  const auto header = table_header(serial);
  REQUIRE(header.size() == 4);
  CHECK(header[2] == "pq10_cg");
  CHECK(header[3] == "pq10_pcg");
  const auto rows = table_rows(serial);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == "16");
  // PCG needs no more iterations than CG on the same cell.
  CHECK(std::stoul(rows[0][3]) <= std::stoul(rows[0][2]));

  ExperimentMatrix bad = matrix;
  bad.sizes = {32, 16};
  CHECK_THROWS_AS(run_table(bad, 1), std::invalid_argument);
  bad = matrix;
  bad.alphas = {2.5};
  CHECK_THROWS_AS(run_table(bad, 1), std::invalid_argument);
}

TEST_CASE("a cell whose solve breaks down is marked fail, not aborted") {
  ExperimentMatrix matrix;
  matrix.dimension = 1;
  matrix.alphas = {1.5};
  matrix.schemes = {SchemeId::PQ10};
  matrix.sizes = {32};
  matrix.run_pcg = false;
  matrix.maxit = 1;  // cannot converge: every cell fails
  const TableResult result = run_table(matrix, 1);
  REQUIRE(result.cells.size() == 1);
  CHECK(result.cells[0].failed);
  const auto rows = table_rows(result);
  CHECK(rows[0].back() == "fail");
}

}  // TEST_SUITE
