#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "assr/errors.hpp"
#include "assr/matrix.hpp"

namespace assr {

enum class StaircaseType { TypeI, TypeII, Both, Neither };

/// Which pairing of rows and columns defines the "diagonal" of a submatrix.
/// type1: a_{alpha_i, beta_i}. type2: the row-reversed pairing a_{alpha_{k+1-i}, beta_i}.
enum class Orientation { type1, type2 };

inline std::string to_string(StaircaseType t) {
  switch (t) {
    case StaircaseType::TypeI: return "type-I";
    case StaircaseType::TypeII: return "type-II";
    case StaircaseType::Both: return "both";
    case StaircaseType::Neither: return "neither";
  }
  return "neither";
}

inline StaircaseType staircase_type_from_string(const std::string& s) {
  if (s == "type-I") return StaircaseType::TypeI;
  if (s == "type-II") return StaircaseType::TypeII;
  if (s == "both") return StaircaseType::Both;
  if (s == "neither") return StaircaseType::Neither;
  throw std::invalid_argument("unknown staircase type '" + s + "'");
}

/// Index sets (I, J, I_hat, J_hat) of a type-I staircase matrix. Lists are
/// 1-based and strictly increasing; I/J and I_hat/J_hat have equal lengths.
struct ZeroPattern {
  std::vector<std::size_t> I;
  std::vector<std::size_t> J;
  std::vector<std::size_t> I_hat;
  std::vector<std::size_t> J_hat;

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

/// a_ii != 0 for i <= min{m,n}; zeros below the diagonal cast zeros to their
/// lower-left, zeros above it cast zeros to their upper-right.
inline bool is_type1_staircase(const RationalMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 1; i <= a.rank_bound(); ++i)
    if (a(i, i).is_zero()) return false;
  // The shadows are closed under single steps, so checking the two
  // neighbouring entries of every zero is enough.
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (!a(i, j).is_zero()) continue;
      if (i > j) {
        if (i + 1 <= m && !a(i + 1, j).is_zero()) return false;
        if (j > 1 && !a(i, j - 1).is_zero()) return false;
      } else if (i < j) {
        if (i > 1 && !a(i - 1, j).is_zero()) return false;
        if (j + 1 <= n && !a(i, j + 1).is_zero()) return false;
      }
    }
  }
  return true;
}

/// P_m A is type-I staircase.
inline bool is_type2_staircase(const RationalMatrix& a) { return is_type1_staircase(reverse_rows(a)); }

inline StaircaseType staircase_type(const RationalMatrix& a) {
  const bool one = is_type1_staircase(a);
  const bool two = is_type2_staircase(a);
  if (one && two) return StaircaseType::Both;
  if (one) return StaircaseType::TypeI;
  if (two) return StaircaseType::TypeII;
  return StaircaseType::Neither;
}

/// Type-I conventions win when both definitions hold.
inline Orientation orientation_of(StaircaseType t) {
  switch (t) {
    case StaircaseType::TypeI:
    case StaircaseType::Both: return Orientation::type1;
    case StaircaseType::TypeII: return Orientation::type2;
    case StaircaseType::Neither: break;
  }
  throw not_staircase_error("matrix is neither type-I nor type-II staircase");
}

namespace detail {

// One pass of the (i_k, j_k) recursion. Requires a type-I staircase matrix.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> pattern_pass(
    const RationalMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols(), r = a.rank_bound();
  std::vector<std::size_t> I{1}, J{1};
  while (true) {
    const std::size_t prev_col = J.back();
    std::size_t last_nonzero = 0;
    for (std::size_t i = m; i >= 1; --i) {
      if (!a(i, prev_col).is_zero()) {
        last_nonzero = i;
        break;
      }
    }
    const std::size_t ik = last_nonzero + 1;
    std::size_t jk = n + 1;
    if (ik <= m) {
      // Row ik is zero at prev_col, so the max exists and jk > prev_col.
      std::size_t last_zero = 0;
      for (std::size_t j = 1; j <= std::min(ik, n); ++j)
        if (a(ik, j).is_zero()) last_zero = j;
      if (last_zero < prev_col) throw std::logic_error("zero pattern recursion did not advance");
      jk = last_zero + 1;
    }
    I.push_back(ik);
    J.push_back(jk);
    if (jk >= r + 1) break;
  }
  return {std::move(I), std::move(J)};
}

}  // namespace detail

/// Computes I, J on A and I_hat = J_bar, J_hat = I_bar from the same
/// recursion on A^T. Throws not_staircase_error unless A is type-I staircase.
inline ZeroPattern zero_pattern(const RationalMatrix& a) {
  if (!is_type1_staircase(a)) throw not_staircase_error("zero_pattern requires a type-I staircase matrix");
  ZeroPattern p;
  std::tie(p.I, p.J) = detail::pattern_pass(a);
  auto [i_bar, j_bar] = detail::pattern_pass(transpose(a));
  p.I_hat = std::move(j_bar);
  p.J_hat = std::move(i_bar);
  return p;
}

/// For j <= i: the pair (j_t, i_t) where j_t is the largest j_s, s < k, with
/// j - j_s <= i - i_s, and k is the position with j_{k-1} <= j < j_k.
inline std::pair<std::size_t, std::size_t> index_jt(const ZeroPattern& p, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1) throw std::invalid_argument("indices are 1-based");
  if (j > i) throw std::invalid_argument("index_jt requires j <= i");
  std::size_t k = 1;
  while (k < p.J.size() && p.J[k] <= j) ++k;
  if (k == p.J.size()) throw std::invalid_argument("column index outside the zero pattern");
  std::size_t t = 0;
  for (std::size_t s = 0; s < k; ++s) {
    const long lhs = static_cast<long>(j) - static_cast<long>(p.J[s]);
    const long rhs = static_cast<long>(i) - static_cast<long>(p.I[s]);
    if (lhs <= rhs) t = s;
  }
  return {p.J[t], p.I[t]};
}

inline std::pair<std::size_t, std::size_t> index_jt(const RationalMatrix& a, std::size_t i, std::size_t j) {
  if (!a.contains(i, j)) throw std::invalid_argument("index outside the matrix");
  return index_jt(zero_pattern(a), i, j);
}

/// For j > i: the pair (i_hat_t, j_hat_t), symmetric to index_jt over (I_hat, J_hat).
inline std::pair<std::size_t, std::size_t> index_it_hat(const ZeroPattern& p, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1) throw std::invalid_argument("indices are 1-based");
  if (j <= i) throw std::invalid_argument("index_it_hat requires j > i");
  std::size_t k = 1;
  while (k < p.I_hat.size() && p.I_hat[k] <= i) ++k;
  if (k == p.I_hat.size()) throw std::invalid_argument("row index outside the zero pattern");
  std::size_t t = 0;
  for (std::size_t s = 0; s < k; ++s) {
    const long lhs = static_cast<long>(i) - static_cast<long>(p.I_hat[s]);
    const long rhs = static_cast<long>(j) - static_cast<long>(p.J_hat[s]);
    if (lhs <= rhs) t = s;
  }
  return {p.I_hat[t], p.J_hat[t]};
}

inline std::pair<std::size_t, std::size_t> index_it_hat(const RationalMatrix& a, std::size_t i,
                                                        std::size_t j) {
  if (!a.contains(i, j)) throw std::invalid_argument("index outside the matrix");
  return index_it_hat(zero_pattern(a), i, j);
}

/// Regenerates the zero mask implied by a pattern: below the diagonal the
/// blocks {i >= i_k, j < j_k}, above it the blocks {i < i_hat_k, j >= j_hat_k}.
/// Entry (i,j) of the result is true where the pattern forces a zero.
inline Matrix<int> pattern_zero_mask(const ZeroPattern& p, std::size_t m, std::size_t n) {
  Matrix<int> mask(m, n, 0);
  for (std::size_t k = 1; k < p.I.size(); ++k)
    for (std::size_t i = p.I[k]; i <= m; ++i)
      for (std::size_t j = 1; j < p.J[k] && j <= n; ++j) mask(i, j) = 1;
  for (std::size_t k = 1; k < p.I_hat.size(); ++k)
    for (std::size_t i = 1; i < p.I_hat[k] && i <= m; ++i)
      for (std::size_t j = p.J_hat[k]; j <= n; ++j) mask(i, j) = 1;
  return mask;
}

/// A staircase matrix together with its type and the zero pattern of its
/// type-I form (A itself, or P_m A for type-II matrices).
class StaircaseMatrix {
 public:
  explicit StaircaseMatrix(RationalMatrix a)
      : matrix_(std::move(a)),
        type_(staircase_type(matrix_)),
        orientation_(orientation_of(type_)),
        oriented_(orientation_ == Orientation::type1 ? matrix_ : reverse_rows(matrix_)),
        pattern_(zero_pattern(oriented_)) {}

  const RationalMatrix& matrix() const noexcept { return matrix_; }
  StaircaseType type() const noexcept { return type_; }
  Orientation orientation() const noexcept { return orientation_; }
  const RationalMatrix& oriented() const noexcept { return oriented_; }
  const ZeroPattern& pattern() const noexcept { return pattern_; }

 private:
  RationalMatrix matrix_;
  StaircaseType type_;
  Orientation orientation_;
  RationalMatrix oriented_;
  ZeroPattern pattern_;
};

}  // namespace assr
