#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "interlace/dense_matrix.hpp"
#include "interlace/eigen.hpp"
#include "interlace/graph.hpp"
#include "interlace/tolerance.hpp"

using namespace interlace;

namespace {
constexpr double kSqrt6 = 2.449489742783178;
}

TEST_CASE("tolerance policy rejects nonsense") {
  CHECK_NOTHROW(TolerancePolicy{}.validate());
  CHECK_THROWS_AS((TolerancePolicy{0.0, 1e-8}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((TolerancePolicy{1e-10, -1.0}.validate()), std::invalid_argument);
  // eq_tol below eigen_tol would let solver noise masquerade as equality
  CHECK_THROWS_AS((TolerancePolicy{1e-6, 1e-8}.validate()), std::invalid_argument);
}

TEST_CASE("dense matrix construction validates shape and finiteness") {
  CHECK_THROWS_AS(DenseMatrix(2, 2, std::vector<double>{1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(DenseMatrix(1, 1, std::vector<double>{std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(DenseMatrix(0, 3), std::invalid_argument);

  const DenseMatrix id = DenseMatrix::identity(3);
  CHECK(id.trace() == 3.0);
  CHECK(id.is_integral());
  CHECK(id.is_nonnegative());
  CHECK(id.max_asymmetry() == 0.0);

  DenseMatrix m(2, 3, {1, 2, 3, 4, 5, 6});
  const DenseMatrix t = m.transpose();
  CHECK(t.rows() == 3);
  CHECK(t(0, 1) == 4.0);
  CHECK(m.frobenius_norm() == Catch::Approx(std::sqrt(91.0)));
  CHECK(m.max_abs() == 6.0);
  CHECK_THROWS_AS(m.trace(), std::invalid_argument);

  const auto y = m.apply(std::vector<double>{1.0, 1.0, 1.0});
  CHECK(y == std::vector<double>{6.0, 15.0});
  CHECK_THROWS_AS(m.apply(std::vector<double>{1.0}), std::invalid_argument);

  const DenseMatrix p = m.multiply(t);  // 2x2 Gram matrix
  CHECK(p(0, 0) == 14.0);
  CHECK(p(0, 1) == 32.0);
  CHECK(p(1, 1) == 77.0);
  CHECK_THROWS_AS(m.multiply(m), std::invalid_argument);
}

TEST_CASE("eigensolver reproduces small closed-form spectra") {
  SECTION("identity") {
    const Spectrum s = symmetric_eigen(DenseMatrix::identity(3));
    REQUIRE(s.values.size() == 3);
    for (double v : s.values) CHECK(v == Catch::Approx(1.0).margin(1e-12));
    CHECK(testutil::orthonormality_defect(s) < 1e-12);
  }

  SECTION("4-cycle adjacency") {
    const DenseMatrix a = adjacency_matrix(Graph::cycle(4));
    const Spectrum s = symmetric_eigen(a);
    CHECK(s.values[0] == Catch::Approx(2.0).margin(1e-10));
    CHECK(s.values[1] == Catch::Approx(0.0).margin(1e-10));
    CHECK(s.values[2] == Catch::Approx(0.0).margin(1e-10));
    CHECK(s.values[3] == Catch::Approx(-2.0).margin(1e-10));
    // independent oracle for the top value
    CHECK(testutil::power_iteration_mu1(a) == Catch::Approx(2.0).margin(1e-8));
  }

  SECTION("2x2 off-diagonal") {
    const DenseMatrix m(2, 2, {0.0, kSqrt6, kSqrt6, 0.0});
    const Spectrum s = symmetric_eigen(m);
    CHECK(s.values[0] == Catch::Approx(kSqrt6).margin(1e-12));
    CHECK(s.values[1] == Catch::Approx(-kSqrt6).margin(1e-12));
  }

  SECTION("already diagonal") {
    const DenseMatrix m(3, 3, {5, 0, 0, 0, -7, 0, 0, 0, 2});
    const Spectrum s = symmetric_eigen(m);
    CHECK(s.values == std::vector<double>{5.0, 2.0, -7.0});
  }

  SECTION("1x1") {
    const Spectrum s = symmetric_eigen(DenseMatrix(1, 1, {-3.0}));
    CHECK(s.values == std::vector<double>{-3.0});
    CHECK(s.vectors(0, 0) == 1.0);
  }
}

TEST_CASE("eigensolver rejects bad input") {
  CHECK_THROWS_AS(symmetric_eigen(DenseMatrix(2, 3)), std::invalid_argument);
  const DenseMatrix skew(2, 2, {0.0, 1.0, -1.0, 0.0});
  CHECK_THROWS_AS(symmetric_eigen(skew), std::invalid_argument);
}

TEST_CASE("random symmetric spectra: residual, orthonormality, trace, determinism") {
  std::mt19937 rng(20240517);
  const TolerancePolicy policy;
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 21u, 34u}) {
    const DenseMatrix m = testutil::random_symmetric(n, rng, -5.0, 5.0);
    const Spectrum s = symmetric_eigen(m, policy);

    for (std::size_t i = 0; i + 1 < n; ++i) REQUIRE(s.values[i] >= s.values[i + 1]);
    CHECK(testutil::residual_fro(m, s) <=
          policy.eigen_tol * std::max(1.0, m.frobenius_norm()));
    CHECK(testutil::orthonormality_defect(s) <= policy.eigen_tol);

    double value_sum = 0.0;
    for (double v : s.values) value_sum += v;
    CHECK(std::abs(value_sum - m.trace()) <= policy.eq_tol * static_cast<double>(n));

    // bitwise determinism, values and vectors both
    const Spectrum again = symmetric_eigen(m, policy);
    CHECK(again.values == s.values);
    CHECK(again.vectors == s.vectors);
  }
}

TEST_CASE("eigenvector sign convention: leading extreme entry is positive") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix m = testutil::random_symmetric(6, rng);
    const Spectrum s = symmetric_eigen(m);
    for (std::size_t k = 0; k < 6; ++k) {
      std::size_t arg = 0;
      double best = 0.0;
      for (std::size_t i = 0; i < 6; ++i)
        if (std::abs(s.vectors(i, k)) > best) {
          best = std::abs(s.vectors(i, k));
          arg = i;
        }
      CHECK(s.vectors(arg, k) > 0.0);
    }
  }
}

TEST_CASE("singular values come from the symmetric embedding") {
  SECTION("all-ones 2x3") {
    const auto sv = singular_values(DenseMatrix(2, 3, 1.0));
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == Catch::Approx(kSqrt6).margin(1e-12));
    CHECK(sv[1] == Catch::Approx(0.0).margin(1e-12));
  }

  SECTION("zero matrix") {
    const auto sv = singular_values(DenseMatrix(3, 2));
    CHECK(sv == std::vector<double>{0.0, 0.0});
  }

  SECTION("1x1 negative") {
    const auto sv = singular_values(DenseMatrix(1, 1, {-3.0}));
    CHECK(sv == std::vector<double>{3.0});
  }

  SECTION("embedding layout") {
    const DenseMatrix a(1, 2, {3.0, 4.0});
    const DenseMatrix b = hermitian_embedding(a);
    REQUIRE(b.rows() == 3);
    CHECK(b(0, 1) == 3.0);
    CHECK(b(0, 2) == 4.0);
    CHECK(b(1, 0) == 3.0);
    CHECK(b(0, 0) == 0.0);
    CHECK(b.max_asymmetry() == 0.0);
    CHECK(singular_values(a)[0] == Catch::Approx(5.0).margin(1e-12));
  }

  SECTION("transpose invariance and ordering on random input") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 1 + rng() % 7;
      const std::size_t cols = 1 + rng() % 7;
      const DenseMatrix m = testutil::random_rectangular(rows, cols, rng, -3.0, 3.0);
      const auto sv = singular_values(m);
      const auto svt = singular_values(m.transpose());
      REQUIRE(sv.size() == svt.size());
      for (std::size_t i = 0; i < sv.size(); ++i) {
        CHECK(sv[i] >= 0.0);
        if (i + 1 < sv.size()) CHECK(sv[i] >= sv[i + 1] - 1e-12);
        CHECK(sv[i] == Catch::Approx(svt[i]).margin(1e-8));
      }
    }
  }
}

TEST_CASE("irreducibility is strong connectivity of the support digraph") {
  CHECK(is_irreducible(adjacency_matrix(Graph::cycle(4))));
  CHECK(is_irreducible(DenseMatrix(1, 1, {5.0})));
  CHECK(is_irreducible(DenseMatrix(1, 1, {0.0})));  // single vertex, trivially strong

  // K2 plus an isolated vertex: support splits
  const DenseMatrix split(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 0});
  CHECK_FALSE(is_irreducible(split));

  // arc with no way back
  const DenseMatrix one_way(2, 2, {0, 1, 0, 0});
  CHECK_FALSE(is_irreducible(one_way));

  CHECK_THROWS_AS(is_irreducible(DenseMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible(DenseMatrix(2, 2, {0, -1, -1, 0})), std::invalid_argument);
}

TEST_CASE("top eigenvector of a connected nonnegative matrix is positive") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testutil::random_graph(6, 0.5, rng);
    if (!g.connected()) continue;
    const Spectrum s = symmetric_eigen(adjacency_matrix(g));
    for (std::size_t i = 0; i < 6; ++i) CHECK(s.vectors(i, 0) > 0.0);
  }
}
