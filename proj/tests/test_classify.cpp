#include <gtest/gtest.h>

#include "assr/classify.hpp"
#include "assr/matrix_io.hpp"
#include "assr/testgen.hpp"
#include "oracle.hpp"

using namespace assr;

namespace {

RationalMatrix e44_with_zero() {
  RationalMatrix a = fixture("example_4_4");
  a(3, 1) = Rational(0);
  return a;
}

// Full-rank staircase matrices with m, n <= 5 and entries in {-3..3}.
std::vector<RationalMatrix> corpus(std::size_t count, std::uint64_t seed) {
  std::vector<RationalMatrix> out;
  Rng rng(seed);
  std::uint64_t gen_seed = seed;
  while (out.size() < count) {
    const std::size_t m = 1 + rng.below(5), n = 1 + rng.below(5);
    RationalMatrix a = rng.chance(1, 2) ? random_matrix(m, n, -3, 3, rng)
                                        : generate_staircase({m, n, gen_seed++, GenKind::staircase_random});
    if (staircase_type(a) == StaircaseType::Neither || exact_rank(a) != a.rank_bound()) continue;
    out.push_back(std::move(a));
  }
  return out;
}

// h over the leading r x r block only.
std::optional<std::size_t> leading_block_h(const RationalMatrix& a) {
  const std::size_t r = a.rank_bound();
  std::optional<std::size_t> h;
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      if (a(i, j).is_zero()) {
        const std::size_t d = i > j ? i - j : j - i;
        if (!h || d < *h) h = d;
      }
  return h;
}

// The constraint in the setting where it is known to hold: type-I with h
// taken on the leading block, type-II through P_m A with the reversal sign
// (-1)^(k(k-1)/2) folded into the signature.
bool constraint_in_scope(const RationalMatrix& a, const Signature& eps) {
  const std::size_t r = a.rank_bound();
  if (is_type1_staircase(a)) return check_signature_constraint(eps, leading_block_h(a), r);
  std::vector<int> flipped;
  for (std::size_t k = 1; k <= r; ++k) flipped.push_back((k * (k - 1) / 2) % 2 == 0 ? eps.at(k) : -eps.at(k));
  return check_signature_constraint(Signature(flipped), leading_block_h(reverse_rows(a)), r);
}

}  // namespace

TEST(Classify, FixtureRanks) {
  EXPECT_EQ(exact_rank(fixture("example_2_7")), 5u);
  EXPECT_EQ(exact_rank(fixture("example_4_4")), 3u);
  EXPECT_EQ(exact_rank(fixture("example_4_7")), 5u);
}

TEST(Classify, SignRegularExamples) {
  const SignVerdict e44 = is_sr(fixture("example_4_4"));
  ASSERT_TRUE(e44);
  EXPECT_EQ(*e44.signature, (Signature{-1, 1, -1}));
  EXPECT_EQ(*is_sr(RationalMatrix::identity(4)).signature, Signature::all_positive(4));
  const SignVerdict mixed = sign_regular_signature(RationalMatrix{{1, 1}, {1, -1}});
  EXPECT_FALSE(mixed);
  ASSERT_TRUE(mixed.witness);
  EXPECT_EQ(mixed.witness->query->order(), 1u);
}

TEST(Classify, TotalPositivity) {
  EXPECT_TRUE(is_tp(RationalMatrix::identity(3)));
  EXPECT_FALSE(is_tp(fixture("example_4_4")));
  // The reference R factor of the 4x3 fixture, read exactly.
  const RationalMatrix r{{Rational::parse("3.605551275464128"), Rational::parse("3.605551552813948"),
                          Rational::parse("1.109400669800514")},
                         {0, Rational::parse("3.741657119512813"), Rational::parse("1.870828477522111")},
                         {0, 0, Rational::parse("1.126601509646810")}};
  EXPECT_TRUE(is_tp(r));
}

TEST(Classify, AssrExamples) {
  const auto e47 = fixture("example_4_7");
  const SignVerdict full = is_assr_full(e47);
  const SignVerdict reduced = is_assr_reduced(e47);
  ASSERT_TRUE(full);
  ASSERT_TRUE(reduced);
  EXPECT_EQ(*full.signature, (Signature{-1, 1, -1, 1, -1}));
  EXPECT_EQ(*reduced.signature, *full.signature);
  EXPECT_EQ(*is_assr_full(RationalMatrix::identity(3)).signature, Signature::all_positive(3));
  EXPECT_EQ(*is_assr_reduced(RationalMatrix::identity(3)).signature, Signature::all_positive(3));

  // Zeroing entry (3,1) keeps the staircase shape (a_41 is already zero) and the signature.
  const SignVerdict zeroed = is_assr_full(e44_with_zero());
  ASSERT_TRUE(zeroed);
  EXPECT_EQ(*zeroed.signature, (Signature{-1, 1, -1}));
}

TEST(Classify, WorkedStaircaseExampleIsNotAssr) {
  const auto e27 = fixture("example_2_7");
  const SignVerdict v = is_assr_reduced(e27);
  EXPECT_FALSE(v);
  ASSERT_TRUE(v.witness);
  ASSERT_TRUE(v.witness->query);
  EXPECT_EQ(v.witness->query->to_string(), "[(5,6)|(4,5)]");
  EXPECT_EQ(*v.witness->value, Rational(-2));
  EXPECT_FALSE(is_assr_full(e27));
}

TEST(Classify, Preconditions) {
  EXPECT_THROW(is_sr(RationalMatrix{{1, 2}, {2, 4}}), precondition_error);
  EXPECT_THROW(is_assr_full(RationalMatrix{{1, 2}, {2, 4}}), precondition_error);
  EXPECT_THROW(is_assr_reduced(RationalMatrix{{1, 0, 1}, {1, 1, 1}, {1, 1, 2}}), not_staircase_error);
}

TEST(Classify, HAndSignatureConstraint) {
  EXPECT_EQ(compute_h(fixture("example_2_7")), std::optional<std::size_t>(1));
  EXPECT_EQ(compute_h(fixture("example_4_4")), std::optional<std::size_t>(2));
  EXPECT_EQ(compute_h(RationalMatrix(3, 3, Rational(1))), std::nullopt);
  EXPECT_TRUE(check_signature_constraint(Signature{-1, 1, -1}, 2, 3));
  EXPECT_FALSE(check_signature_constraint(Signature{-1, -1}, 1, 2));
  EXPECT_TRUE(check_signature_constraint(Signature{-1, -1}, std::nullopt, 2));
  EXPECT_TRUE(check_signature_constraint(Signature{1, -1, 1}, 3, 3));
  EXPECT_TRUE(check_signature_constraint(Signature{1, 1, 1}, 0, 3));
  EXPECT_FALSE(check_signature_constraint(Signature{-1, -1, -1}, 0, 3));
}

TEST(Classify, SignatureConstraintFailsOnZeroColumnOutsideSquare) {
  const RationalMatrix a{{-2, -3, 0}, {-2, -2, 0}};
  ASSERT_TRUE(is_type1_staircase(a));
  const SignVerdict v = is_assr_full(a);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v.signature, (Signature{-1, -1}));
  EXPECT_EQ(oracle::assr_signature(a), std::optional<std::vector<int>>({-1, -1}));
  EXPECT_EQ(compute_h(a), std::optional<std::size_t>(1));
  EXPECT_FALSE(check_signature_constraint(*v.signature, compute_h(a), 2));
  EXPECT_EQ(leading_block_h(a), std::nullopt);
  EXPECT_FALSE(check_signature_constraint(*is_assr_full(transpose(a)).signature, compute_h(transpose(a)), 2));
}

TEST(Classify, SignatureConstraintHoldsInScope) {
  std::size_t checked = 0;
  for (const auto& a : corpus(3000, 91)) {
    const SignVerdict v = is_assr_reduced(a);
    if (!v || !compute_h(a)) continue;
    ++checked;
    EXPECT_TRUE(constraint_in_scope(a, *v.signature)) << format_matrix(a);
    if (is_type1_staircase(a) && a.rows() == a.cols()) {
      EXPECT_TRUE(check_signature_constraint(*v.signature, compute_h(a), a.rank_bound())) << format_matrix(a);
    }
  }
  EXPECT_GT(checked, 200u);
}

TEST(Classify, SubmatrixInheritance) {
  EXPECT_TRUE(check_submatrix_inheritance(RationalMatrix::identity(4), 20, 1));
  EXPECT_TRUE(check_submatrix_inheritance(fixture("example_4_7"), 50, 2));
  EXPECT_THROW(check_submatrix_inheritance(fixture("example_2_7"), 5, 3), precondition_error);
}

TEST(Classify, ReportOnFixtures) {
  const auto e44 = classify(fixture("example_4_4"));
  EXPECT_TRUE(e44.is_sr);
  EXPECT_FALSE(e44.is_tp);
  EXPECT_TRUE(e44.is_assr);
  EXPECT_EQ(*e44.signature, (Signature{-1, 1, -1}));
  EXPECT_EQ(e44.h, std::optional<std::size_t>(2));
  EXPECT_EQ(e44.h_constraint_holds, std::optional<bool>(true));
  EXPECT_TRUE(e44.witnesses.empty());

  const auto id = classify(RationalMatrix::identity(3));
  EXPECT_TRUE(id.is_tp);

  const auto e47_full = classify(fixture("example_4_7"), Method::full);
  const auto e47_reduced = classify(fixture("example_4_7"), Method::reduced);
  EXPECT_TRUE(e47_full.is_assr);
  EXPECT_EQ(e47_full.signature, e47_reduced.signature);

  const auto deficient = classify(RationalMatrix{{1, 2}, {2, 4}});
  EXPECT_EQ(deficient.rank, 1u);
  EXPECT_FALSE(deficient.is_sr);
  ASSERT_EQ(deficient.witnesses.size(), 1u);

  const auto not_staircase = classify(RationalMatrix{{1, 0, 1}, {1, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(not_staircase.staircase, StaircaseType::Neither);
  EXPECT_FALSE(not_staircase.is_sr);
  EXPECT_FALSE(not_staircase.is_assr);

  const auto positive_not_staircase = classify(RationalMatrix{{1, 0, 1}});
  EXPECT_TRUE(positive_not_staircase.sign_regular_ignoring_staircase);
  EXPECT_FALSE(positive_not_staircase.is_sr);
}

TEST(Classify, AgreesWithDefinitionOracle) {
  for (const auto& a : corpus(400, 31)) {
    const auto expected = oracle::assr_signature(a);
    const SignVerdict full = is_assr_full(a);
    const SignVerdict reduced = is_assr_reduced(a);
    ASSERT_EQ(full.signature.has_value(), expected.has_value());
    ASSERT_EQ(reduced.signature.has_value(), expected.has_value());
    if (expected) {
      EXPECT_EQ(full.signature->signs(), *expected);
      EXPECT_EQ(reduced.signature->signs(), *expected);
    }
  }
}

TEST(Classify, CorpusProperties) {
  std::size_t assr_count = 0;
  for (const auto& a : corpus(600, 57)) {
    const auto report = classify(a, Method::full);
    const std::size_t r = a.rank_bound();
    if (report.is_tp) {
      EXPECT_TRUE(report.is_sr);
      EXPECT_TRUE(report.signature->is_all_positive());
    }
    if (report.is_assr) {
      ++assr_count;
      EXPECT_NE(report.staircase, StaircaseType::Neither);
      EXPECT_TRUE(report.signature);
      ASSERT_TRUE(report.is_sr);
      EXPECT_EQ(*is_sr(a).signature, *report.signature);
      EXPECT_TRUE(check_submatrix_inheritance(a, 10, r));
    }
    for (const auto& w : report.witnesses)
      if (w.query) {
        EXPECT_EQ(minor(a, *w.query), *w.value);
      }
    EXPECT_EQ(classify(a, Method::full), report);
  }
  EXPECT_GT(assr_count, 50u);
}

TEST(Classify, TransposeInvarianceOnSquareAndTypeI) {
  std::size_t checked = 0;
  for (const auto& a : corpus(1500, 13)) {
    if (a.rows() != a.cols() && !is_type1_staircase(a)) continue;
    ++checked;
    EXPECT_EQ(is_assr_full(a).signature, is_assr_full(transpose(a)).signature) << format_matrix(a);
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Classify, TransposeOfRectangularTypeIIIsNotStaircase) {
  const RationalMatrix a{{0}, {1}};
  EXPECT_EQ(staircase_type(a), StaircaseType::TypeII);
  EXPECT_EQ(*is_assr_full(a).signature, (Signature{1}));
  EXPECT_EQ(staircase_type(transpose(a)), StaircaseType::Neither);
  EXPECT_THROW(is_assr_full(transpose(a)), not_staircase_error);
}
