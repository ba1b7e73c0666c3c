#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "assr/errors.hpp"
#include "assr/index_sequence.hpp"
#include "assr/matrix.hpp"
#include "assr/rational.hpp"
#include "assr/staircase.hpp"

namespace assr {

/// Upper bound on the number of (alpha, beta) pairs a single enumeration may visit.
struct Budget {
  static constexpr std::uint64_t default_limit = 2'000'000;

  std::uint64_t limit = default_limit;

  /// Throws budget_exceeded_error if `required` exceeds the limit.
  void charge(std::uint64_t required) const {
    if (required > limit) throw budget_exceeded_error(required, limit);
  }
};

/// Selects A[alpha|beta]: rows alpha, columns beta, both of length k.
struct MinorQuery {
  IndexSequence rows;
  IndexSequence cols;

  MinorQuery(IndexSequence r, IndexSequence c) : rows(std::move(r)), cols(std::move(c)) {
    if (rows.size() != cols.size())
      throw std::invalid_argument("minor query needs row and column sequences of equal length");
  }

  std::size_t order() const noexcept { return rows.size(); }
  bool is_consecutive() const noexcept { return rows.is_consecutive() && cols.is_consecutive(); }

  /// "[(1,2)|(1,3)]"
  std::string to_string() const { return "[" + rows.to_string() + "|" + cols.to_string() + "]"; }

  friend bool operator==(const MinorQuery&, const MinorQuery&) = default;
  friend std::strong_ordering operator<=>(const MinorQuery& a, const MinorQuery& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    return a.cols <=> b.cols;
  }
};

template <typename T>
void check_query(const Matrix<T>& a, const MinorQuery& q) {
  if (q.order() > a.rank_bound())
    throw std::invalid_argument("minor order " + std::to_string(q.order()) + " exceeds min{m,n}");
  if (q.rows.back() > a.rows() || q.cols.back() > a.cols())
    throw std::invalid_argument("minor query " + q.to_string() + " outside " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
}

template <typename T>
Matrix<T> submatrix(const Matrix<T>& a, const IndexSequence& rows, const IndexSequence& cols) {
  if (rows.back() > a.rows() || cols.back() > a.cols())
    throw std::invalid_argument("submatrix indices outside the matrix");
  Matrix<T> out(rows.size(), cols.size());
  std::size_t i = 1;
  for (std::size_t r : rows) {
    std::size_t j = 1;
    for (std::size_t c : cols) out(i, j++) = a(r, c);
    ++i;
  }
  return out;
}

template <typename T>
Matrix<T> submatrix(const Matrix<T>& a, const MinorQuery& q) {
  return submatrix(a, q.rows, q.cols);
}

namespace detail {

// Clears denominators row by row. Returns the integer rows and the product of
// the row multipliers, so that det(rational) = det(integer) / scale.
inline std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& a, mpz_class* scale) {
  std::vector<std::vector<mpz_class>> rows(a.rows(), std::vector<mpz_class>(a.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 1; j <= a.cols(); ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).value().get_den_mpz_t());
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      const mpq_class& x = a(i, j).value();
      rows[i - 1][j - 1] = x.get_num() * (lcm / x.get_den());
    }
    if (scale) *scale *= lcm;
  }
  return rows;
}

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination on the integer-scaled rows.
inline Rational bareiss_determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t k = a.rows();
  mpz_class scale;
  auto m = detail::integer_rows(a, &scale);
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (m[p][p] == 0) {
      std::size_t swap_with = p + 1;
      while (swap_with < k && m[swap_with][p] == 0) ++swap_with;
      if (swap_with == k) return Rational(0);
      std::swap(m[p], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        mpz_class t = m[i][j] * m[p][p] - m[i][p] * m[p][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][p] = 0;
    }
    prev = m[p][p];
  }
  mpz_class det = m[k - 1][k - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

/// Rank by fraction-free row echelon reduction; exact.
inline std::size_t exact_rank(const RationalMatrix& a) {
  auto m = detail::integer_rows(a, nullptr);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t row = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class t = m[i][j] * m[row][col] - m[i][col] * m[row][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return row;
}

/// Exact det A[alpha|beta].
inline Rational minor(const RationalMatrix& a, const MinorQuery& q) {
  check_query(a, q);
  return bareiss_determinant(submatrix(a, q));
}

/// Determinant by LU with partial pivoting.
inline double determinant(const RealMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t k = a.rows();
  std::vector<double> m(a.data());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * k + j]; };
  double det = 1.0;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t pivot = p;
    for (std::size_t i = p + 1; i < k; ++i)
      if (std::abs(at(i, p)) > std::abs(at(pivot, p))) pivot = i;
    if (at(pivot, p) == 0.0) return 0.0;
    if (pivot != p) {
      for (std::size_t j = 0; j < k; ++j) std::swap(at(p, j), at(pivot, j));
      det = -det;
    }
    det *= at(p, p);
    for (std::size_t i = p + 1; i < k; ++i) {
      const double f = at(i, p) / at(p, p);
      for (std::size_t j = p + 1; j < k; ++j) at(i, j) -= f * at(p, j);
    }
  }
  return det;
}

inline double minor(const RealMatrix& a, const MinorQuery& q) {
  check_query(a, q);
  return determinant(submatrix(a, q));
}

/// Nontrivial: every diagonal entry of the submatrix is nonzero. For type-II
/// the diagonal is taken after reversing the selected rows, so that P_k B is
/// a nontrivial submatrix of P_m A.
template <typename T>
bool is_nontrivial(const Matrix<T>& a, const MinorQuery& q, Orientation orientation = Orientation::type1) {
  check_query(a, q);
  const std::size_t k = q.order();
  const auto& rows = q.rows.indices();
  const auto& cols = q.cols.indices();
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t row = orientation == Orientation::type1 ? rows[t] : rows[k - 1 - t];
    if (is_zero(a(row, cols[t]))) return false;
  }
  return true;
}

template <typename T>
bool is_nontrivial(const Matrix<T>& a, const MinorQuery& q, bool type2) {
  return is_nontrivial(a, q, type2 ? Orientation::type2 : Orientation::type1);
}

/// Boundary flags of a consecutive submatrix A[alpha|beta].
struct BoundaryKind {
  bool column_boundary = false;
  bool row_boundary = false;
  bool initial = false;
  bool column_generalized = false;
  bool row_generalized = false;

  bool any_boundary() const noexcept { return column_boundary || row_boundary; }

  friend bool operator==(const BoundaryKind&, const BoundaryKind&) = default;
};

namespace detail {

template <typename T>
BoundaryKind classify_boundary_type1(const Matrix<T>& a, const std::vector<std::size_t>& rows,
                                     const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  bool diagonal = true;
  for (std::size_t t = 0; t < k; ++t)
    if (is_zero(a(rows[t], cols[t]))) diagonal = false;
  const bool lead = !is_zero(a(rows.front(), cols.front()));

  // A[alpha | beta_1 - 1] = 0
  bool column_edge = cols.front() == 1;
  if (!column_edge) {
    column_edge = true;
    for (std::size_t r : rows)
      if (!is_zero(a(r, cols.front() - 1))) column_edge = false;
  }
  // A[alpha_1 - 1 | beta] = 0
  bool row_edge = rows.front() == 1;
  if (!row_edge) {
    row_edge = true;
    for (std::size_t c : cols)
      if (!is_zero(a(rows.front() - 1, c))) row_edge = false;
  }

  BoundaryKind kind;
  kind.column_boundary = diagonal && column_edge;
  kind.row_boundary = diagonal && row_edge;
  kind.column_generalized = lead && column_edge;
  kind.row_generalized = lead && row_edge;
  kind.initial = kind.any_boundary() && (rows.front() == 1 || cols.front() == 1);
  return kind;
}

}  // namespace detail

/// Column/row boundary, initial and generalized boundary flags. Both
/// sequences must be consecutive. Type-II matrices are evaluated as P_k B
/// inside P_m A.
template <typename T>
BoundaryKind classify_boundary(const Matrix<T>& a, const MinorQuery& q, Orientation orientation) {
  check_query(a, q);
  if (!q.is_consecutive())
    throw std::invalid_argument("boundary classification needs consecutive sequences, got " + q.to_string());
  if (orientation == Orientation::type1)
    return detail::classify_boundary_type1(a, q.rows.indices(), q.cols.indices());
  const std::size_t m = a.rows();
  std::vector<std::size_t> reversed;
  reversed.reserve(q.order());
  for (auto it = q.rows.indices().rbegin(); it != q.rows.indices().rend(); ++it)
    reversed.push_back(m + 1 - *it);
  return detail::classify_boundary_type1(reverse_rows(a), reversed, q.cols.indices());
}

/// Orientation taken from the matrix's staircase type (type-I when neither holds).
inline BoundaryKind classify_boundary(const RationalMatrix& a, const MinorQuery& q) {
  const StaircaseType type = staircase_type(a);
  const Orientation o = type == StaircaseType::TypeII ? Orientation::type2 : Orientation::type1;
  return classify_boundary(a, q, o);
}

/// Number of (alpha, beta) pairs at order k.
inline std::uint64_t query_count(std::size_t m, std::size_t n, std::size_t k, bool consecutive_only) {
  return saturating_mul(sequence_count(k, m, consecutive_only), sequence_count(k, n, consecutive_only));
}

/// Calls visit(query) for every (alpha, beta) at order k in lexicographic
/// order until it returns false.
template <typename Visitor>
void for_each_query(std::size_t m, std::size_t n, std::size_t k, bool consecutive_only,
                    const Budget& budget, Visitor&& visit) {
  if (k < 1 || k > std::min(m, n))
    throw std::invalid_argument("minor order must satisfy 1 <= k <= min{m,n}");
  budget.charge(query_count(m, n, k, consecutive_only));
  for (const IndexSequence& alpha : enumerate_sequences(k, m, consecutive_only))
    for (const IndexSequence& beta : enumerate_sequences(k, n, consecutive_only))
      if (!visit(MinorQuery(alpha, beta))) return;
}

/// Streams every order-k minor with its exact value, lexicographic in (alpha, beta).
/// The visitor returns false to stop early.
template <typename Visitor>
void enumerate_minors(const RationalMatrix& a, std::size_t k, bool consecutive_only, Visitor&& visit,
                      const Budget& budget = {}) {
  for_each_query(a.rows(), a.cols(), k, consecutive_only, budget, [&](const MinorQuery& q) {
    return visit(q, bareiss_determinant(submatrix(a, q)));
  });
}

/// Streams every nontrivial order-k minor with its exact value.
template <typename Visitor>
void enumerate_nontrivial_minors(const RationalMatrix& a, std::size_t k, bool consecutive_only,
                                 Orientation orientation, Visitor&& visit, const Budget& budget = {}) {
  for_each_query(a.rows(), a.cols(), k, consecutive_only, budget, [&](const MinorQuery& q) {
    if (!is_nontrivial(a, q, orientation)) return true;
    return visit(q, bareiss_determinant(submatrix(a, q)));
  });
}

/// Materialized form of enumerate_nontrivial_minors, for small inputs.
inline std::vector<std::pair<MinorQuery, Rational>> nontrivial_minors(const RationalMatrix& a, std::size_t k,
                                                                      bool consecutive_only,
                                                                      Orientation orientation,
                                                                      const Budget& budget = {}) {
  std::vector<std::pair<MinorQuery, Rational>> out;
  enumerate_nontrivial_minors(
      a, k, consecutive_only, orientation,
      [&](const MinorQuery& q, const Rational& v) {
        out.emplace_back(q, v);
        return true;
      },
      budget);
  return out;
}

}  // namespace assr
