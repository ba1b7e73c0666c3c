#include <gtest/gtest.h>

#include "assr/minors.hpp"
#include "assr/testgen.hpp"
#include "oracle.hpp"

using namespace assr;

namespace {

MinorQuery query(std::vector<std::size_t> rows, std::vector<std::size_t> cols, std::size_t m, std::size_t n) {
  return MinorQuery(IndexSequence(std::move(rows), m), IndexSequence(std::move(cols), n));
}

MinorQuery random_query(Rng& rng, std::size_t m, std::size_t n, std::size_t max_k) {
  const std::size_t k = 1 + rng.below(std::min({m, n, max_k}));
  return MinorQuery(IndexSequence(rng.subset(k, m), m), IndexSequence(rng.subset(k, n), n));
}

}  // namespace

TEST(Minor, Examples) {
  EXPECT_EQ(minor(fixture("example_4_4"), query({1, 2}, {1, 2}, 4, 3)), Rational(13));
  EXPECT_EQ(minor(RationalMatrix::identity(3), query({1, 3}, {1, 3}, 3, 3)), Rational(1));
  EXPECT_EQ(minor(fixture("example_2_7"), query({1, 2}, {1, 2}, 7, 5)), Rational(1));
}

TEST(Minor, RejectsBadQueries) {
  const auto a = fixture("example_4_4");
  EXPECT_THROW(minor(a, query({1, 2, 3, 4}, {1, 2, 3, 3}, 4, 3)), std::invalid_argument);
  EXPECT_THROW(minor(a, query({1, 5}, {1, 2}, 5, 3)), std::invalid_argument);
  EXPECT_THROW(MinorQuery(IndexSequence({1}, 4), IndexSequence({1, 2}, 3)), std::invalid_argument);
}

TEST(Minor, BareissMatchesLaplace) {
  Rng rng(77);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t m = 1 + rng.below(6), n = 1 + rng.below(6);
    RationalMatrix a(m, n);
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        a(i, j) = rng.chance(1, 4) ? Rational(0) : Rational(rng.uniform(-9, 9), rng.uniform(1, 5));
    const MinorQuery q = random_query(rng, m, n, 5);
    EXPECT_EQ(minor(a, q), oracle::laplace_minor(a, q.rows.indices(), q.cols.indices()));
  }
}

TEST(Minor, ExactRankMatchesOracle) {
  EXPECT_EQ(exact_rank(RationalMatrix::identity(3)), 3u);
  EXPECT_EQ(exact_rank(fixture("example_4_4")), 3u);
  EXPECT_EQ(exact_rank(fixture("example_2_7")), 5u);
  EXPECT_EQ(exact_rank(RationalMatrix{{1, 2}, {2, 4}}), 1u);
  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_matrix(1 + rng.below(5), 1 + rng.below(5), -1, 1, rng);
    EXPECT_EQ(exact_rank(a), oracle::rank(a));
  }
}

TEST(Minor, BlockTriangularMultiplicativity) {
  // a_{alpha_s, beta_{s+1}} = 0 together with the staircase shadow makes
  // A[alpha|beta] block lower triangular.
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + rng.below(4), s = 1 + rng.below(k - 1);
    RationalMatrix a(k, k);
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j <= k; ++j)
        a(i, j) = (i <= s && j > s) ? Rational(0) : Rational(rng.uniform(-4, 4));
    const auto whole = IndexSequence::consecutive(1, k, k);
    const auto head = IndexSequence::consecutive(1, s, k);
    const auto tail = IndexSequence::consecutive(s + 1, k - s, k);
    EXPECT_EQ(minor(a, MinorQuery(whole, whole)), minor(a, MinorQuery(head, head)) * minor(a, MinorQuery(tail, tail)));
  }
}

TEST(Nontrivial, Examples) {
  const auto e27 = fixture("example_2_7");
  EXPECT_TRUE(is_nontrivial(e27, query({1, 2}, {1, 2}, 7, 5)));
  EXPECT_FALSE(is_nontrivial(e27, query({4, 5}, {1, 2}, 7, 5)));
  const auto id = RationalMatrix::identity(4);
  for (const auto& s : enumerate_sequences(2, 4)) EXPECT_TRUE(is_nontrivial(id, MinorQuery(s, s)));
  // Type-II pairing reads the rows in reverse.
  const RationalMatrix anti{{0, 1}, {1, 0}};
  EXPECT_TRUE(is_nontrivial(anti, query({1, 2}, {1, 2}, 2, 2), true));
  EXPECT_FALSE(is_nontrivial(anti, query({1, 2}, {1, 2}, 2, 2), false));
}

TEST(Boundary, Examples) {
  const auto e47 = fixture("example_4_7");
  const BoundaryKind b = classify_boundary(e47, query({3, 4}, {2, 3}, 6, 5));
  EXPECT_TRUE(b.column_boundary);
  EXPECT_FALSE(b.initial);
  EXPECT_FALSE(classify_boundary(e47, query({1, 2}, {2, 3}, 6, 5)).column_boundary);
  // Row boundary example: A[1|3,4] = 0 above A[2,3|3,4].
  EXPECT_TRUE(classify_boundary(e47, query({2, 3}, {3, 4}, 6, 5)).row_boundary);
  const BoundaryKind edge = classify_boundary(e47, query({2, 3}, {1, 2}, 6, 5));
  EXPECT_TRUE(edge.column_boundary);
  EXPECT_TRUE(edge.initial);
  EXPECT_THROW(classify_boundary(e47, query({1, 3}, {1, 2}, 6, 5)), std::invalid_argument);
}

TEST(Boundary, FlagInvariantsOnRandomStaircases) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto a = generate_staircase({1 + seed % 5, 1 + (seed / 5) % 5, seed, GenKind::staircase_random});
    const bool type2 = staircase_type(a) == StaircaseType::TypeII;
    for (std::size_t k = 1; k <= a.rank_bound(); ++k)
      for_each_query(a.rows(), a.cols(), k, true, Budget{}, [&](const MinorQuery& q) {
        const BoundaryKind b = classify_boundary(a, q);
        if (b.column_boundary) {
          EXPECT_TRUE(b.column_generalized);
        }
        if (b.row_boundary) {
          EXPECT_TRUE(b.row_generalized);
        }
        if (b.initial) {
          EXPECT_TRUE(q.rows.front() == 1 || q.cols.front() == 1 || type2);
        }
        if (b.any_boundary()) {
          EXPECT_TRUE(is_nontrivial(a, q, type2));
        }
        if (type2) {
          std::vector<std::size_t> reversed;
          for (auto it = q.rows.indices().rbegin(); it != q.rows.indices().rend(); ++it)
            reversed.push_back(a.rows() + 1 - *it);
          const MinorQuery flipped(IndexSequence(reversed, a.rows()), q.cols);
          EXPECT_EQ(b, classify_boundary(reverse_rows(a), flipped, Orientation::type1));
        }
        return true;
      });
  }
}

TEST(Enumeration, NontrivialStreams) {
  const auto id2 = RationalMatrix::identity(2);
  const auto items = nontrivial_minors(id2, 2, false, Orientation::type1);
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0].first, query({1, 2}, {1, 2}, 2, 2));
  EXPECT_EQ(items[0].second, Rational(1));

  const auto e27 = fixture("example_2_7");
  const auto entries = nontrivial_minors(e27, 1, true, Orientation::type1);
  std::size_t nonzero = 0;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 5; ++j) nonzero += e27(i, j).is_zero() ? 0 : 1;
  EXPECT_EQ(entries.size(), nonzero);
  for (const auto& [q, v] : entries) EXPECT_FALSE(v.is_zero());

  const auto e44 = fixture("example_4_4");
  bool found = false;
  for (const auto& [q, v] : nontrivial_minors(e44, 3, true, Orientation::type1))
    found = found || q == query({1, 2, 3}, {1, 2, 3}, 4, 3);
  EXPECT_TRUE(found);
}

TEST(Enumeration, LexicographicOrderAndCounts) {
  const auto a = fixture("example_4_7");
  for (std::size_t k = 1; k <= 5; ++k)
    for (bool consecutive : {false, true}) {
      std::vector<MinorQuery> seen;
      for_each_query(6, 5, k, consecutive, Budget{}, [&](const MinorQuery& q) {
        seen.push_back(q);
        return true;
      });
      EXPECT_EQ(seen.size(), query_count(6, 5, k, consecutive));
      EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    }
  std::size_t visited = 0;
  enumerate_minors(a, 2, false, [&](const MinorQuery&, const Rational&) { return ++visited < 4; });
  EXPECT_EQ(visited, 4u);
}

TEST(Enumeration, BudgetIsEnforced) {
  const auto a = fixture("example_4_7");
  EXPECT_THROW(enumerate_minors(a, 2, false, [](const MinorQuery&, const Rational&) { return true; }, Budget{10}),
               budget_exceeded_error);
  try {
    enumerate_minors(a, 2, false, [](const MinorQuery&, const Rational&) { return true; }, Budget{10});
  } catch (const budget_exceeded_error& e) {
    EXPECT_EQ(e.required(), 150u);
    EXPECT_EQ(e.limit(), 10u);
  }
  EXPECT_NO_THROW(enumerate_minors(a, 2, false, [](const MinorQuery&, const Rational&) { return true; }, Budget{150}));
  EXPECT_EQ(Budget{}.limit, 2'000'000u);
}
