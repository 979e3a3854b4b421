#include <doctest.h>

#include <cmath>
#include <random>

#include "fracsolve/spectra.hpp"
#include "fracsolve/symbol.hpp"
#include "support/oracles.hpp"

using namespace fracsolve;

namespace {

DenseMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("diagonal and 2x2 anchors") {
  DenseMatrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  CHECK(sym_eigs(d) == std::vector<double>{1.0, 2.0, 3.0});

  DenseMatrix swap(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  const auto e = sym_eigs(swap);
  CHECK(e[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("2x2 and 3x3 match characteristic-polynomial roots") {
  DenseMatrix a(2, 2);
  a(0, 0) = 2.0;
  a(0, 1) = a(1, 0) = -1.0;
  a(1, 1) = 0.5;
  // Eigenvalues of [[2,-1],[-1,0.5]]: (2.5 +- sqrt(2.25+4-4+1))/2 computed directly.
  const double tr = 2.5, det = 2.0 * 0.5 - 1.0;
  const double disc = std::sqrt(tr * tr / 4.0 - det);
  const auto e2 = sym_eigs(a);
  CHECK(e2[0] == doctest::Approx(tr / 2.0 - disc).epsilon(1e-12));
  CHECK(e2[1] == doctest::Approx(tr / 2.0 + disc).epsilon(1e-12));

  // Circulant-like symmetric 3x3 with known spectrum {0, 3, 3} shifted:
  // J = ones(3); eigs {0,0,3}; A = J + I -> {1,1,4}.
  DenseMatrix j3(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) j3(i, k) = 1.0;
    j3(i, i) = 2.0;
  }
  const auto e3 = sym_eigs(j3);
  CHECK(e3[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e3[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e3[2] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("trace is preserved") {
  const DenseMatrix a = random_symmetric(64, 99);
  const auto e = sym_eigs(a);
  double trace = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < 64; ++i) trace += a(i, i);
  for (double v : e) sum += v;
  CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
}

TEST_CASE("input validation") {
  DenseMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  bad(1, 0) = 0.5;
  CHECK_THROWS_AS(sym_eigs(bad), std::invalid_argument);
  CHECK_THROWS_AS(sym_eigs(DenseMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(sym_eigs(DenseMatrix(4097, 4097)), std::invalid_argument);
}

TEST_CASE("G is negative semidefinite at oracle sizes") {
  for (std::size_t m : {32u, 128u}) {
    for (SchemeId scheme : {SchemeId::PQ10, SchemeId::PQ1M1}) {
      const auto eigs = sym_eigs(dense_toeplitz(build_G(FracOrder(1.5), scheme, m)));
      CHECK(eigs.back() <= 1e-10);
    }
  }
}

TEST_CASE("A is positive definite with eigenvalues above one") {
  for (std::size_t m : {16u, 64u}) {
    FracOperator1D op(FracOrder(1.5), SchemeId::PQ10, m, 1.0 / (m + 1.0), 1.0 / 16.0, 0.3, 8.0);
    const auto eigs = sym_eigs(dense_operator(op));
    CHECK(eigs.front() > 1.0);
  }
}

TEST_CASE("preconditioned spectrum trivial cases") {
  // eps = 0: A = P = (1+s*ht) I.
  FracOperator1D op0(FracOrder(1.5), SchemeId::PQ10, 16, 1.0 / 17.0, 1.0 / 16.0, 0.0, 8.0);
  const auto e0 = precond_spectrum(op0, TauPrecond1D::build(op0));
  for (double e : e0) CHECK(e == doctest::Approx(1.0).epsilon(1e-12));

  // A already in the tau algebra (tridiagonal G): P matches A exactly.
  SymToeplitz tri;
  tri.col.assign(16, 0.0);
  tri.col[0] = -2.0;
  tri.col[1] = 1.0;
  FracOperator1D op_tri(tri, FracOrder(1.5), SchemeId::PQ10, 1.0 / 17.0, 1.0 / 16.0, 0.3, 8.0);
  const auto e1 = precond_spectrum(op_tri, TauPrecond1D::build(op_tri));
  for (double e : e1) CHECK(e == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("preconditioned spectrum concentrates near one") {
  const std::size_t m = 128;
  FracOperator1D op(FracOrder(1.5), SchemeId::PQ10, m, 1.0 / (m + 1.0), 1.0 / 16.0, 0.3, 8.0);
  const auto plain = sym_eigs(dense_operator(op));
  const auto pre = precond_spectrum(op, TauPrecond1D::build(op));
  CHECK(plain.back() / plain.front() > 10.0);
  std::size_t outside = 0;
  for (double e : pre) {
    if (std::abs(e - 1.0) > 0.1) ++outside;
  }
  CHECK(outside <= 8);
}

TEST_CASE("cluster report fractions grow with the radius") {
  const std::vector<double> eigs{1.0, 1.0, 1.0};
  const auto rep = cluster_report(eigs, 1.0, {0.01, 0.1});
  CHECK(rep.fractions[0] == 1.0);
  CHECK(rep.fractions[1] == 1.0);
  CHECK(rep.outlier_count_at.at(0.1) == 0);

  const std::vector<double> spread{0.0, 0.5, 0.9, 1.0, 1.1, 2.0};
  const auto rep2 = cluster_report(spread, 1.0, {0.15, 0.5, 1.0});
  for (std::size_t i = 1; i < rep2.fractions.size(); ++i) CHECK(rep2.fractions[i] >= rep2.fractions[i - 1]);
  CHECK_THROWS_AS(cluster_report(std::vector<double>{}, 0.0, {0.1}), std::invalid_argument);
}

TEST_CASE("spectrum of A tracks samples of 1 - eps^2 gamma f at fixed gamma") {
  // Fix gamma = ht*cbar = 1 by choosing ht = 1/cbar per size, so the symbol
  // 1 - eps^2 f stays the same while M grows.
  auto w1_at = [](std::size_t m) {
    const double hx = 1.0 / (m + 1.0);
    const double ht = 1.0 / cbar(FracOrder(1.5), hx);
    FracOperator1D op(FracOrder(1.5), SchemeId::PQ10, m, hx, ht, 0.3, 0.0);
    const auto eigs = sym_eigs(dense_operator(op));
    SymbolFn fn{FracOrder(1.5), SchemeId::PQ10, SymbolForm::ClosedForm, 0};
    auto samples = symbol_samples(fn, m, SampleGrid::UniformGrid);
    for (auto& v : samples) v = 1.0 - 0.09 * v;
    return esd_compare(eigs, samples).wasserstein1;
  };
  const double w32 = w1_at(32);
  const double w64 = w1_at(64);
  const double w128 = w1_at(128);
  CHECK(w64 < w32);
  CHECK(w128 < w64);
}

}  // TEST_SUITE
