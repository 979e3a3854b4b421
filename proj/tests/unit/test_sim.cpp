#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracsolve/io.hpp"
#include "fracsolve/simulate.hpp"
#include "fracsolve/spectra.hpp"
#include "support/oracles.hpp"

using namespace fracsolve;

namespace {

SimConfig problem3_config(double alpha, std::size_t m, std::size_t steps, double final_time) {
  SimConfig cfg;
  cfg.dimension = 1;
  cfg.problem = 3;
  cfg.alpha = alpha;
  cfg.m = m;
  cfg.steps = steps;
  cfg.final_time = final_time;
  cfg.eps = 0.02;
  return cfg;
}

}  // namespace

TEST_SUITE("simulate") {

TEST_CASE("potential derivative: odd, zero at zero, root near 0.9575") {
  const PotentialParams p;
  CHECK(potential_f(0.0, p) == 0.0);
  for (double u : {0.1, 0.5, 0.9, 0.99}) {
    CHECK(potential_f(-u, p) == doctest::Approx(-potential_f(u, p)).epsilon(1e-14));
  }
  const double root = potential_positive_root(p);
  CHECK(root == doctest::Approx(0.957504).epsilon(1e-5));
  CHECK(std::abs(potential_f(root, p)) < 1e-5);
  CHECK(default_stabilization(p) == doctest::Approx(8.017).epsilon(1e-3));
}

TEST_CASE("potential well: even, zero at zero, double-to-single well transition") {
  PotentialParams p;
  p.theta = 0.4;
  p.theta_c = 1.0;
  CHECK(potential_F(0.0, p) == 0.0);
  for (double u : {0.3, 0.8}) {
    CHECK(potential_F(u, p) == doctest::Approx(potential_F(-u, p)).epsilon(1e-14));
  }

  auto count_minima = [](const PotentialParams& params) {
    const std::size_t n = 2001;
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = -0.999 + 1.998 * static_cast<double>(i) / static_cast<double>(n - 1);
      vals[i] = potential_F(u, params);
    }
    int minima = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (vals[i] < vals[i - 1] && vals[i] <= vals[i + 1]) ++minima;
    }
    return minima;
  };
  CHECK(count_minima(p) == 2);
  PotentialParams single;
  single.theta = 1.0;
  single.theta_c = 1.0;
  CHECK(count_minima(single) == 1);

  PotentialParams bad;
  bad.theta = 1.2;
  bad.theta_c = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  PotentialParams bad_clamp;
  bad_clamp.clamp_delta = 1e-3;
  CHECK_THROWS_AS(bad_clamp.validate(), std::invalid_argument);
}

TEST_CASE("initial conditions hit their anchors") {
  SimConfig p3 = problem3_config(1.5, 63, 16, 1.0);
  const auto u3 = initial_condition(p3);
  CHECK(u3[15] == doctest::Approx(0.5).epsilon(1e-14));  // x = 16/64 = 0.25

  SimConfig p1 = p3;
  p1.problem = 1;
  const auto u1 = initial_condition(p1);
  const double x = 16.0 / 64.0;
  CHECK(u1[15] == doctest::Approx(std::pow(x, 3) * std::pow(1.0 - x, 3)).epsilon(1e-14));

  SimConfig p4;
  p4.dimension = 2;
  p4.problem = 4;
  p4.m = 127;
  p4.m2 = 127;
  p4.eps = 0.02;
  p4.final_time = 60.0;
  p4.steps = 1000;
  const auto u4 = initial_condition(p4);
  CHECK(u4[63 * 127 + 63] == doctest::Approx(0.99).epsilon(1e-14));  // center of the star
  double umax = 0.0, umin = 0.0;
  for (double v : u4) {
    umax = std::max(umax, v);
    umin = std::min(umin, v);
  }
  CHECK(umax <= 0.99);
  CHECK(umin >= -0.99);

  SimConfig p5 = p4;
  p5.problem = 5;
  p5.seed = 777;
  const auto u5a = initial_condition(p5);
  const auto u5b = initial_condition(p5);
  CHECK(u5a == u5b);
  for (double v : u5a) CHECK(std::abs(v) < 0.01);
  p5.seed = 778;
  CHECK(initial_condition(p5) != u5a);
}

TEST_CASE("config validation names the offenses") {
  SimConfig cfg = problem3_config(1.5, 63, 16, 1.0);
  cfg.alpha = 2.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.alpha = 1.5;
  cfg.dimension = 2;  // problem 3 is one-dimensional
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("zero field is a fixed point of the step") {
  FracOperator1D op(FracOrder(1.5), SchemeId::PQ10, 32, 1.0 / 33.0, 1.0 / 16.0, 0.3, 8.0);
  const TauPrecond1D p = TauPrecond1D::build(op);
  const std::vector<double> zero(32, 0.0);
  const auto res = step_1d(zero, op, &p, PotentialParams{}, {1e-8, 100});
  CHECK(res.stats.converged);
  for (double v : res.x) CHECK(v == 0.0);
}

TEST_CASE("eps=0, s=0: one step is the explicit update") {
  const double ht = 1.0 / 16.0;
  FracOperator1D op(FracOrder(1.5), SchemeId::PQ10, 16, 1.0 / 17.0, ht, 0.0, 0.0);
  const PotentialParams pot;
  const double c = 0.4;
  const std::vector<double> u(16, c);
  const auto res = step_1d(u, op, nullptr, pot, {1e-12, 100});
  REQUIRE(res.stats.converged);
  const double want = c - ht * potential_f(c, pot);
  for (double v : res.x) CHECK(v == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("one step of the benchmark problem matches a dense direct solve") {
  SimConfig cfg;
  cfg.dimension = 1;
  cfg.problem = 1;
  cfg.alpha = 1.5;
  cfg.m = 64;
  cfg.steps = 16;
  cfg.final_time = 1.0;
  cfg.eps = 0.3;
  const double s = cfg.stabilization_value();
  FracOperator1D op(FracOrder(cfg.alpha), cfg.scheme, cfg.m, cfg.hx(), cfg.ht(), cfg.eps, s);
  const TauPrecond1D p = TauPrecond1D::build(op);
  const auto u0 = initial_condition(cfg);
  const auto res = step_1d(u0, op, &p, cfg.potential, {1e-10, 1000});
  REQUIRE(res.stats.converged);

  std::vector<double> b(cfg.m);
  for (std::size_t i = 0; i < cfg.m; ++i) {
    b[i] = op.identity_coeff() * u0[i] - cfg.ht() * potential_f(u0[i], cfg.potential);
  }
  const auto want = oracles::cholesky_solve(dense_operator(op), b);
  CHECK(oracles::rel_error(res.x, want) < 1e-8);
}

TEST_CASE("discrete energy: zero field, nonnegative quadratic part") {
  FracOperator1D op(FracOrder(1.5), SchemeId::PQ10, 24, 1.0 / 25.0, 1.0 / 16.0, 0.3, 8.0);
  const PotentialParams pot;
  CHECK(discrete_energy(std::vector<double>(24, 0.0), op, pot) == 0.0);
  OperatorWorkspace ws = op.make_workspace();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto u = oracles::random_vector(24, 500 + seed);
    std::vector<double> lu(24);
    op.apply_riesz(u, lu, ws);
    double quad = 0.0;
    for (std::size_t i = 0; i < 24; ++i) quad += u[i] * lu[i];
    CHECK(-quad >= -1e-10);  // u^T (cbar G) u <= 0
  }
}

TEST_CASE("zero-step run records only the initial state") {
  SimConfig cfg = problem3_config(1.5, 32, 0, 1.0);
  const Trajectory traj = run_simulation(cfg);
  CHECK(traj.snapshots.size() == 1);
  CHECK(traj.snapshots[0].time == 0.0);
  CHECK(traj.pcg_iters.empty());
  CHECK(traj.energy.size() == 1);
}

TEST_CASE("short run dissipates energy and respects the max bound") {
  SimConfig cfg = problem3_config(1.5, 64, 16, 1.5);
  const Trajectory traj = run_simulation(cfg);
  const double slack = 1e-10 * (1.0 + std::abs(traj.energy.front().second));
  for (std::size_t i = 1; i < traj.energy.size(); ++i) {
    CHECK(traj.energy[i].second <= traj.energy[i - 1].second + slack);
  }
  const double bound = potential_positive_root(cfg.potential) + 1e-3;
  for (const auto& [t, m] : traj.max_norm) CHECK(m <= bound);
}

TEST_CASE("2d run dissipates energy and stays within the bound (reduced scale)") {
  for (int problem : {4, 5}) {
    SimConfig cfg;
    cfg.dimension = 2;
    cfg.problem = problem;
    cfg.alpha = 1.5;
    cfg.alpha2 = 1.5;
    cfg.m = 32;
    cfg.m2 = 32;
    cfg.final_time = 0.6;
    cfg.steps = 10;
    cfg.eps = 0.02;
    cfg.seed = 11;
    const Trajectory traj = run_simulation(cfg);
    const double slack = 1e-10 * (1.0 + std::abs(traj.energy.front().second));
    for (std::size_t i = 1; i < traj.energy.size(); ++i) {
      CHECK(traj.energy[i].second <= traj.energy[i - 1].second + slack);
    }
    const double bound = potential_positive_root(cfg.potential) + 1e-3;
    if (problem == 5) {
      // Spinodal noise starts well inside the invariant region and stays there.
      for (const auto& [t, m] : traj.max_norm) CHECK(m <= bound);
    } else {
      // The star profile starts at 0.99, above the root of f; its max decays
      // monotonically toward the invariant region.
      for (std::size_t i = 1; i < traj.max_norm.size(); ++i) {
        CHECK(traj.max_norm[i].second <= traj.max_norm[i - 1].second + 1e-12);
      }
      CHECK(traj.max_norm.front().second == doctest::Approx(0.99));
    }
  }
}

TEST_CASE("riesz application converges at second order on a smooth profile") {
  auto apply_on_grid = [](std::size_t mp1) {
    const std::size_t m = mp1 - 1;
    const double hx = 1.0 / static_cast<double>(mp1);
    FracOperator1D op(FracOrder(1.5), SchemeId::PQ10, m, hx, 1.0, 0.0, 0.0);
    std::vector<double> u(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double x = static_cast<double>(i + 1) * hx;
      u[i] = std::pow(x * (1.0 - x), 5);
    }
    OperatorWorkspace ws = op.make_workspace();
    std::vector<double> lu(m);
    op.apply_riesz(u, lu, ws);
    return lu;
  };
  const std::size_t fine = 2048;
  const auto reference = apply_on_grid(fine);
  auto error_at = [&](std::size_t mp1) {
    const auto coarse = apply_on_grid(mp1);
    const std::size_t stride = fine / mp1;
    double err = 0.0;
    for (std::size_t i = 1; i < mp1; ++i) {
      err = std::max(err, std::abs(coarse[i - 1] - reference[i * stride - 1]));
    }
    return err;
  };
  const double e32 = error_at(32);
  const double e64 = error_at(64);
  const double e128 = error_at(128);
  CHECK(e32 / e64 >= 3.0);
  CHECK(e64 / e128 >= 3.0);
}

TEST_CASE("interface steepness decreases with the order (coarse smoke run)") {
  auto final_gradient = [](double alpha) {
    SimConfig cfg = problem3_config(alpha, 128, 32, 3.0);
    const Trajectory traj = run_simulation(cfg);
    const auto& u = traj.snapshots.back().field;
    const double h = cfg.hx();
    double g = std::abs(u.front()) / h;  // zero boundary on both sides
    for (std::size_t i = 1; i < u.size(); ++i) g = std::max(g, std::abs(u[i] - u[i - 1]) / h);
    g = std::max(g, std::abs(u.back()) / h);
    return g;
  };
  const double g_sharp = final_gradient(1.25);
  const double g_soft = final_gradient(1.9);
  CHECK(g_sharp > g_soft);
}

TEST_CASE("rounded mean iteration count") {
  Trajectory t;
  t.pcg_iters = {4, 5, 5};
  CHECK(rounded_mean_iters(t) == 5);  // mean 4.67
  t.pcg_iters = {4, 5};
  CHECK(rounded_mean_iters(t) == 5);  // half rounds up
  CHECK(rounded_mean_iters(Trajectory{}) == 0);
}

}  // TEST_SUITE
