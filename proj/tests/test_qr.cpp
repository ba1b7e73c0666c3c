#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "assr/qr.hpp"
#include "assr/testgen.hpp"
#include "reference_factors.hpp"

using namespace assr;

namespace {

double max_diff(const RealMatrix& a, const RealMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

MinorQuery query(std::vector<std::size_t> rows, std::vector<std::size_t> cols, std::size_t m, std::size_t n) {
  return MinorQuery(IndexSequence(std::move(rows), m), IndexSequence(std::move(cols), n));
}

// ||R||_F ||R^-1||_F, an upper bound on the 2-norm condition number of A.
double condition_bound(const RealMatrix& r) {
  const std::size_t n = r.rows();
  RealMatrix inv(n, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = j; i >= 1; --i) {
      double s = i == j ? 1.0 : 0.0;
      for (std::size_t k = i + 1; k <= j; ++k) s -= r(i, k) * inv(k, j);
      inv(i, j) = s / r(i, i);
    }
  double a = 0.0, b = 0.0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      a += r(i, j) * r(i, j);
      b += inv(i, j) * inv(i, j);
    }
  return std::sqrt(a * b);
}

}  // namespace

TEST(MGS, IdentityIsFixed) {
  const QRPair qr = mgs_qr(RealMatrix::identity(4));
  EXPECT_EQ(qr.q, RealMatrix::identity(4));
  EXPECT_EQ(qr.r, RealMatrix::identity(4));
}

TEST(MGS, ReproducesReferenceFactors4x3) {
  const QRPair qr = mgs_qr(to_real(fixture("example_4_4")));
  EXPECT_LE(max_diff(qr.q, reference::q44()), 1e-12);
  EXPECT_LE(max_diff(qr.r, reference::r44()), 1e-12);
}

TEST(MGS, ReproducesReferenceFactors6x5) {
  const QRPair qr = mgs_qr(to_real(fixture("example_4_7")));
  EXPECT_LE(max_diff(qr.q, reference::q47()), 5e-5);
  EXPECT_LE(max_diff(qr.r, reference::r47()), 5e-5);
}

TEST(MGS, StructuralGuarantees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 5, m = n + (seed / 5) % 3;
    const RealMatrix a = to_real(generate_tp({m, n, seed, GenKind::tp_bidiagonal}));
    const QRPair qr = mgs_qr(a);
    for (std::size_t i = 1; i <= n; ++i) {
      EXPECT_GT(qr.r(i, i), 0.0);
      for (std::size_t j = 1; j < i; ++j) EXPECT_EQ(qr.r(i, j), 0.0);
    }
    // MGS loses orthogonality in proportion to the condition number.
    const double eps = std::numeric_limits<double>::epsilon();
    EXPECT_LE(orthonormality_residual(qr.q), 10.0 * static_cast<double>(m * n) * eps * condition_bound(qr.r));
    EXPECT_LE(reconstruction_residual(a, qr), 1e-12 * static_cast<double>(n) * max_abs(a));
    const QRPair again = mgs_qr(a);
    EXPECT_EQ(std::memcmp(qr.q.data().data(), again.q.data().data(), sizeof(double) * m * n), 0);
    EXPECT_EQ(std::memcmp(qr.r.data().data(), again.r.data().data(), sizeof(double) * n * n), 0);
  }
}

TEST(MGS, Errors) {
  EXPECT_THROW(mgs_qr(RealMatrix{{1.0, 2.0}}), std::invalid_argument);
  try {
    mgs_qr(RealMatrix{{1.0, 2.0, 1.0}, {2.0, 4.0, 0.0}, {3.0, 6.0, 1.0}});
    FAIL() << "expected rank deficiency";
  } catch (const rank_deficiency_error& e) {
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(mgs_qr(RealMatrix{{0.0}, {0.0}}), rank_deficiency_error);
}

TEST(Orthonormality, Examples) {
  EXPECT_TRUE(verify_orthonormal(RealMatrix::identity(3), 0.0));
  EXPECT_TRUE(verify_orthonormal(mgs_qr(to_real(fixture("example_4_4"))).q, 1e-10));
  EXPECT_TRUE(verify_orthonormal(reference::q44(), 1e-4));
  EXPECT_FALSE(verify_orthonormal(RealMatrix{{1.0, 1.0}, {0.0, 0.0}}, 1e-10));
}

TEST(VerifyRTp, Examples) {
  EXPECT_TRUE(verify_r_tp(mgs_qr(to_real(fixture("example_4_4"))).r, 1e-10));
  EXPECT_TRUE(verify_r_tp(reference::r44(), 1e-10));
  EXPECT_TRUE(verify_r_tp(RealMatrix::identity(3), 1e-10));
  const TpCheck bad = verify_r_tp(RealMatrix{{1.0, -1.0}, {0.0, 1.0}}, 1e-10);
  EXPECT_FALSE(bad);
  ASSERT_EQ(bad.failures.size(), 1u);
  EXPECT_EQ(bad.failures[0].query, query({1}, {2}, 2, 2));
  EXPECT_EQ(bad.checked, 5u);
  EXPECT_THROW(verify_r_tp(RealMatrix{{1.0, 0.0}, {1.0, 1.0}}, 1e-10), precondition_error);
  EXPECT_THROW(verify_r_tp(RealMatrix::identity(6), 1e-10, Budget{100}), budget_exceeded_error);
}

TEST(VerifyRTp, GeneratedTotallyPositiveMatrices) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 5, m = n + seed % 2;
    const QRPair qr = mgs_qr(to_real(generate_tp({m, n, seed, GenKind::tp_bidiagonal})));
    EXPECT_TRUE(verify_r_tp(qr.r, 1e-8)) << "seed " << seed;
  }
}

TEST(BoundaryTransfer, WorkedExample) {
  const auto a = fixture("example_4_7");
  const QRPair qr = mgs_qr(to_real(a));
  const BoundarySignReport report = check_boundary_transfer(a, qr);
  EXPECT_GT(report.checked, 0u);
  EXPECT_TRUE(report.violations.empty());
  EXPECT_TRUE(report.zero_block_failures.empty());
  EXPECT_TRUE(report.passed());
  // A[1|3,4] vanishes but Q[1|3,4] does not: the row boundary analogue fails.
  EXPECT_TRUE(a(1, 3).is_zero() && a(1, 4).is_zero());
  EXPECT_NEAR(qr.q(1, 3), -0.0481, 5e-5);
  EXPECT_NEAR(qr.q(1, 4), 0.0987, 5e-5);
}

TEST(BoundaryTransfer, IdentityAndPreconditions) {
  const auto id = RationalMatrix::identity(3);
  EXPECT_TRUE(check_boundary_transfer(id, mgs_qr(to_real(id))).passed());
  const auto e27 = fixture("example_2_7");
  const auto e44 = fixture("example_4_4");
  EXPECT_THROW(check_boundary_transfer(e27, mgs_qr(to_real(e27))), precondition_error);
  const RationalMatrix anti{{0, 1}, {1, 0}};
  EXPECT_THROW(check_boundary_transfer(anti, mgs_qr(to_real(anti))), precondition_error);
  EXPECT_TRUE(check_boundary_transfer(e44, mgs_qr(to_real(e44))).passed());
}

TEST(BoundaryTransfer, GeneratedAssrTypeIMatrices) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400 && checked < 60; ++seed) {
    const std::size_t n = 1 + seed % 4, m = n + (seed / 4) % 3;
    const auto a = generate_tp({m, n, seed, GenKind::tp_bidiagonal});
    if (!is_type1_staircase(a) || !is_assr_reduced(a)) continue;
    ++checked;
    EXPECT_TRUE(check_boundary_transfer(a, mgs_qr(to_real(a))).passed()) << "seed " << seed;
  }
  EXPECT_GE(checked, 30u);
}

TEST(CauchyBinet, Examples) {
  const auto id = to_real(RationalMatrix::identity(3));
  EXPECT_EQ(cauchy_binet_residual(id, mgs_qr(id), query({1, 3}, {1, 3}, 3, 3)), 0.0);
  const auto e44 = to_real(fixture("example_4_4"));
  const auto q44 = query({1, 2}, {1, 2}, 4, 3);
  EXPECT_NEAR(minor(e44, q44), 13.0, 1e-12);
  EXPECT_LE(cauchy_binet_residual(e44, mgs_qr(e44), q44), 1e-9);
  const auto e47 = to_real(fixture("example_4_7"));
  const auto q47 = query({3, 4}, {2, 3}, 6, 5);
  EXPECT_LE(cauchy_binet_residual(e47, mgs_qr(e47), q47), 1e-6 * cauchy_binet_scale(e47, 2));
}

TEST(CauchyBinet, AllSmallQueriesOnFixtures) {
  for (const char* name : {"example_4_4", "example_4_7"}) {
    const auto a = to_real(fixture(name));
    const QRPair qr = mgs_qr(a);
    for (std::size_t k = 1; k <= 3; ++k)
      for_each_query(a.rows(), a.cols(), k, false, Budget{}, [&](const MinorQuery& q) {
        EXPECT_LE(cauchy_binet_residual(a, qr, q), 1e-9 * cauchy_binet_scale(a, k)) << name << q.to_string();
        return true;
      });
  }
}
