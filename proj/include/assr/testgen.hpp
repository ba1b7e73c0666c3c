#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "assr/matrix.hpp"
#include "assr/rng.hpp"

namespace assr {

enum class GenKind { tp_bidiagonal, staircase_random, sign_transform };

inline std::string to_string(GenKind k) {
  switch (k) {
    case GenKind::tp_bidiagonal: return "tp_bidiagonal";
    case GenKind::staircase_random: return "staircase_random";
    case GenKind::sign_transform: return "sign_transform";
  }
  return "tp_bidiagonal";
}

struct GenSpec {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::uint64_t seed = 0;
  GenKind kind = GenKind::tp_bidiagonal;
};

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"example_2_7", "example_4_4", "example_4_7"};
  return names;
}

/// The worked examples, entry for entry. In example_4_4 the (3,1) entry is
/// -1/1000000: the value that reproduces the reference Q and R factors.
inline RationalMatrix fixture(const std::string& name) {
  if (name == "example_2_7")
    return RationalMatrix{{1, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1},
                          {0, 0, 0, 2, 3}, {0, 0, 0, 4, 5}, {0, 0, 0, 0, 0}};
  if (name == "example_4_4")
    return RationalMatrix{{-3, -1, 0}, {-2, -5, -2}, {Rational(-1, 1000000), -1, -1}, {0, 0, -1}};
  if (name == "example_4_7")
    return RationalMatrix{{-1, -4, 0, 0, 0},       {-2, -10, -10, -16, -2},  {0, -6, -33, -60, -21},
                          {0, -8, -46, -92, -70},  {0, 0, -9, -60, -242},    {0, 0, -6, -60, -443}};
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

/// Factors of L_1 ... L_p D U_1 ... U_p where every L_t (U_t) is unit lower
/// (upper) bidiagonal with the given nonnegative sub- (super-) diagonal.
struct BidiagonalFactors {
  std::size_t order = 1;
  std::vector<std::vector<Rational>> lower;  // each of length order-1
  std::vector<Rational> diagonal;            // length order, positive
  std::vector<std::vector<Rational>> upper;  // each of length order-1
};

/// Multiplies the factors and keeps the leading rows x cols block. Products of
/// nonnegative bidiagonal matrices with positive diagonals are TP, and so is
/// every submatrix of them.
inline RationalMatrix bidiagonal_product(const BidiagonalFactors& f, std::size_t rows, std::size_t cols) {
  const std::size_t n = f.order;
  if (rows > n || cols > n) throw std::invalid_argument("truncation larger than the factor order");
  if (f.diagonal.size() != n) throw std::invalid_argument("diagonal core has the wrong length");
  RationalMatrix acc = RationalMatrix::identity(n);
  for (const auto& sub : f.lower) {
    if (sub.size() + 1 != n) throw std::invalid_argument("lower factor has the wrong length");
    RationalMatrix l = RationalMatrix::identity(n);
    for (std::size_t i = 2; i <= n; ++i) l(i, i - 1) = sub[i - 2];
    acc = acc * l;
  }
  RationalMatrix d(n, n, Rational(0));
  for (std::size_t i = 1; i <= n; ++i) {
    if (f.diagonal[i - 1].sign() <= 0) throw std::invalid_argument("diagonal core must be positive");
    d(i, i) = f.diagonal[i - 1];
  }
  acc = acc * d;
  for (const auto& super : f.upper) {
    if (super.size() + 1 != n) throw std::invalid_argument("upper factor has the wrong length");
    RationalMatrix u = RationalMatrix::identity(n);
    for (std::size_t i = 1; i < n; ++i) u(i, i + 1) = super[i - 1];
    acc = acc * u;
  }
  return leading_block(acc, rows, cols);
}

namespace detail {

// p/q with 1 <= p, q <= 9.
inline Rational small_positive(Rng& rng) {
  const long p = rng.uniform(1, 9);
  const long q = rng.uniform(1, 9);
  return Rational(mpz_class(p), mpz_class(q));
}

inline Rational small_nonnegative(Rng& rng) {
  if (rng.chance(1, 3)) return Rational(0);
  return small_positive(rng);
}

}  // namespace detail

/// Random full-rank TP matrix from max(m,n)-1 lower and upper bidiagonal
/// factors with small rational entries.
inline RationalMatrix generate_tp(const GenSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) throw std::invalid_argument("generator dimensions must be positive");
  if (spec.kind != GenKind::tp_bidiagonal) throw std::invalid_argument("generate_tp needs kind tp_bidiagonal");
  Rng rng(spec.seed);
  BidiagonalFactors f;
  f.order = std::max(spec.rows, spec.cols);
  const std::size_t factors = f.order - 1;
  for (std::size_t t = 0; t < factors; ++t) {
    std::vector<Rational> sub(f.order - 1);
    for (auto& x : sub) x = detail::small_nonnegative(rng);
    f.lower.push_back(std::move(sub));
  }
  for (std::size_t i = 0; i < f.order; ++i) f.diagonal.push_back(detail::small_positive(rng));
  for (std::size_t t = 0; t < factors; ++t) {
    std::vector<Rational> super(f.order - 1);
    for (auto& x : super) x = detail::small_nonnegative(rng);
    f.upper.push_back(std::move(super));
  }
  return bidiagonal_product(f, spec.rows, spec.cols);
}

/// Uniform integer entries in [lo, hi].
inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi, Rng& rng) {
  RationalMatrix a(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) a(i, j) = Rational(rng.uniform(lo, hi));
  return a;
}

/// Random staircase matrix: a random type-I zero profile filled with nonzero
/// integers from {-3..3}; half of the outputs are row-reversed (type-II).
inline RationalMatrix generate_staircase(const GenSpec& spec) {
  const std::size_t m = spec.rows, n = spec.cols;
  if (m == 0 || n == 0) throw std::invalid_argument("generator dimensions must be positive");
  Rng rng(spec.seed);

  // Column j is zero from row low[j] down; row i is zero from column up[i] on.
  std::vector<std::size_t> low(n + 1, m + 1), up(m + 1, n + 1);
  std::size_t floor = 2;
  for (std::size_t j = 1; j <= std::min(n, m); ++j) {
    floor = std::max(floor, j + 1);
    low[j] = rng.chance(1, 2) ? m + 1 : static_cast<std::size_t>(rng.uniform(static_cast<long>(floor), static_cast<long>(m + 1)));
    floor = low[j];
  }
  floor = 2;
  for (std::size_t i = 1; i <= std::min(m, n); ++i) {
    floor = std::max(floor, i + 1);
    up[i] = rng.chance(1, 2) ? n + 1 : static_cast<std::size_t>(rng.uniform(static_cast<long>(floor), static_cast<long>(n + 1)));
    floor = up[i];
  }

  RationalMatrix a(m, n, Rational(0));
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const bool lower_zero = i > j && i >= low[j];
      const bool upper_zero = i < j && j >= up[i];
      if (lower_zero || upper_zero) continue;
      long v = rng.uniform(1, 3);
      if (rng.chance(1, 2)) v = -v;
      a(i, j) = Rational(v);
    }
  if (rng.chance(1, 2)) a = reverse_rows(a);
  return a;
}

enum class SignTransformKind { negate, reverse_columns };

/// The transformed matrix plus the per-order factor its minors pick up:
/// (-1)^k for negation, (-1)^{k(k-1)/2} for column reversal.
struct SignTransform {
  RationalMatrix matrix;
  std::vector<int> multipliers;  // multipliers[k-1] for order k
};

inline SignTransform sign_transform(const RationalMatrix& a, SignTransformKind which) {
  SignTransform out{which == SignTransformKind::negate ? -a : reverse_columns(a), {}};
  for (std::size_t k = 1; k <= a.rank_bound(); ++k) {
    const std::size_t exponent = which == SignTransformKind::negate ? k : k * (k - 1) / 2;
    out.multipliers.push_back(exponent % 2 == 0 ? 1 : -1);
  }
  return out;
}

/// Dispatches on spec.kind. sign_transform applies a seeded choice of
/// negation or column reversal to a generated TP matrix.
inline RationalMatrix generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::tp_bidiagonal: return generate_tp(spec);
    case GenKind::staircase_random: return generate_staircase(spec);
    case GenKind::sign_transform: {
      GenSpec base = spec;
      base.kind = GenKind::tp_bidiagonal;
      Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
      const auto which = rng.chance(1, 2) ? SignTransformKind::negate : SignTransformKind::reverse_columns;
      return sign_transform(generate_tp(base), which).matrix;
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace assr
