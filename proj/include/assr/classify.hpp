#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "assr/errors.hpp"
#include "assr/minors.hpp"
#include "assr/rng.hpp"
#include "assr/signature.hpp"
#include "assr/staircase.hpp"

namespace assr {

/// A failed check. Minor-level failures carry the query and its exact value.
struct Witness {
  std::optional<MinorQuery> query;
  std::optional<Rational> value;
  std::string reason;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a sign-regularity style check: the signature when the check
/// passes, otherwise the first violation in lexicographic (k, alpha, beta) order.
struct SignVerdict {
  std::optional<Signature> signature;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return signature.has_value(); }
};

enum class Method { reduced, full };

inline std::string to_string(Method m) { return m == Method::full ? "full" : "reduced"; }

struct ClassificationReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  StaircaseType staircase = StaircaseType::Neither;
  std::size_t rank = 0;
  Method method = Method::reduced;
  bool is_sr = false;
  bool is_tp = false;
  bool is_assr = false;
  /// Every minor is weakly sign regular although the matrix is not staircase.
  bool sign_regular_ignoring_staircase = false;
  /// ASSR signature when ASSR, else the SR signature when SR.
  std::optional<Signature> signature;
  std::optional<std::size_t> h;
  /// eps_k = eps_1^k for k <= r-h+1; present when the matrix is ASSR.
  std::optional<bool> h_constraint_holds;
  std::vector<Witness> witnesses;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

namespace detail {

inline void require_full_rank(const RationalMatrix& a) {
  const std::size_t rank = exact_rank(a);
  if (rank != a.rank_bound())
    throw precondition_error("rank(A) = " + std::to_string(rank) + " < min{m,n} = " +
                             std::to_string(a.rank_bound()));
}

inline Orientation require_staircase(const RationalMatrix& a) {
  return orientation_of(staircase_type(a));
}

/// eps_k det >= 0 over every minor; eps_k is the sign of the first nonzero
/// order-k minor, +1 when all of them vanish.
inline SignVerdict weak_sign_regularity(const RationalMatrix& a, const Budget& budget) {
  std::vector<int> signs;
  for (std::size_t k = 1; k <= a.rank_bound(); ++k) {
    int eps = 0;
    std::optional<Witness> failure;
    enumerate_minors(
        a, k, false,
        [&](const MinorQuery& q, const Rational& v) {
          const int s = v.sign();
          if (s == 0) return true;
          if (eps == 0) {
            eps = s;
            return true;
          }
          if (s != eps) {
            failure = Witness{q, v, "order-" + std::to_string(k) + " minor has sign opposite to eps_" +
                                         std::to_string(k) + " = " + std::to_string(eps)};
            return false;
          }
          return true;
        },
        budget);
    if (failure) return {std::nullopt, std::move(failure)};
    signs.push_back(eps == 0 ? 1 : eps);
  }
  return {Signature(std::move(signs)), std::nullopt};
}

/// Leading minor used to fix eps_k: A[1..k|1..k] for type-I, A[m-k+1..m|1..k]
/// (the leading minor of P_m A) for type-II. Its diagonal is nonzero on a
/// staircase matrix, so it is always nontrivial.
inline MinorQuery reference_query(std::size_t m, std::size_t n, std::size_t k, Orientation o) {
  const std::size_t first_row = o == Orientation::type1 ? 1 : m - k + 1;
  return MinorQuery(IndexSequence::consecutive(first_row, k, m), IndexSequence::consecutive(1, k, n));
}

/// eps_k det > 0 over every nontrivial minor (consecutive ones only when asked).
inline SignVerdict strict_sign_regularity(const RationalMatrix& a, Orientation o, bool consecutive_only,
                                          const Budget& budget) {
  std::vector<int> signs;
  for (std::size_t k = 1; k <= a.rank_bound(); ++k) {
    const MinorQuery ref = reference_query(a.rows(), a.cols(), k, o);
    const Rational ref_value = minor(a, ref);
    if (ref_value.is_zero())
      return {std::nullopt, Witness{ref, ref_value, "nontrivial reference minor of order " +
                                                        std::to_string(k) + " vanishes"}};
    const int eps = ref_value.sign();
    std::optional<Witness> failure;
    enumerate_nontrivial_minors(
        a, k, consecutive_only, o,
        [&](const MinorQuery& q, const Rational& v) {
          if (v.sign() * eps > 0) return true;
          failure = Witness{q, v, "nontrivial order-" + std::to_string(k) + " minor violates eps_" +
                                      std::to_string(k) + " = " + std::to_string(eps)};
          return false;
        },
        budget);
    if (failure) return {std::nullopt, std::move(failure)};
    signs.push_back(eps);
  }
  return {Signature(std::move(signs)), std::nullopt};
}

}  // namespace detail

/// Signature for which eps_k det A[alpha|beta] >= 0 over all minors, ignoring
/// the staircase requirement. Requires full rank.
inline SignVerdict sign_regular_signature(const RationalMatrix& a, const Budget& budget = {}) {
  detail::require_full_rank(a);
  return detail::weak_sign_regularity(a, budget);
}

/// SR in the staircase sense: type-I or type-II staircase, full rank, and
/// eps_k det A[alpha|beta] >= 0 for every minor of every order k <= r.
inline SignVerdict is_sr(const RationalMatrix& a, const Budget& budget = {}) {
  detail::require_full_rank(a);
  detail::require_staircase(a);
  return detail::weak_sign_regularity(a, budget);
}

/// SR with signature (1, ..., 1).
inline bool is_tp(const RationalMatrix& a, const Budget& budget = {}) {
  const SignVerdict v = is_sr(a, budget);
  return v.signature && v.signature->is_all_positive();
}

/// ASSR by exhaustive enumeration of every nontrivial minor over Q_{k,m} x Q_{k,n}.
inline SignVerdict is_assr_full(const RationalMatrix& a, const Budget& budget = {}) {
  detail::require_full_rank(a);
  const Orientation o = detail::require_staircase(a);
  return detail::strict_sign_regularity(a, o, false, budget);
}

/// ASSR through the consecutive characterization: only nontrivial minors with
/// alpha in Q^0_{k,m} and beta in Q^0_{k,n} are inspected. The consecutive
/// family is closed under transposition, so wide matrices are checked in place.
inline SignVerdict is_assr_reduced(const RationalMatrix& a, const Budget& budget = {}) {
  detail::require_full_rank(a);
  const Orientation o = detail::require_staircase(a);
  return detail::strict_sign_regularity(a, o, true, budget);
}

/// h = min{|i-j| : a_ij = 0}; absent when A has no zero entry.
inline std::optional<std::size_t> compute_h(const RationalMatrix& a) {
  std::optional<std::size_t> h;
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      if (!a(i, j).is_zero()) continue;
      const std::size_t d = i > j ? i - j : j - i;
      if (!h || d < *h) h = d;
    }
  return h;
}

/// eps_k = eps_1^k for every 2 <= k <= min(r, r-h+1) (vacuous without zeros).
inline bool check_signature_constraint(const Signature& eps, std::optional<std::size_t> h, std::size_t r) {
  if (eps.size() < r) throw std::invalid_argument("signature shorter than r");
  if (!h || *h > r) return true;
  const std::size_t last = std::min(r, r - *h + 1);
  int power = eps.at(1);
  for (std::size_t k = 2; k <= last; ++k) {
    power *= eps.at(1);
    if (eps.at(k) != power) return false;
  }
  return true;
}

/// Draws `samples` random nontrivial square submatrices of an ASSR matrix and
/// checks that each is ASSR (in the parent's orientation) with the truncated
/// signature (eps_1, ..., eps_k).
inline bool check_submatrix_inheritance(const RationalMatrix& a, std::size_t samples, std::uint64_t seed,
                                        const Budget& budget = {}) {
  const SignVerdict parent = is_assr_full(a, budget);
  if (!parent) throw precondition_error("check_submatrix_inheritance requires an ASSR matrix");
  const Orientation o = orientation_of(staircase_type(a));
  const std::size_t r = a.rank_bound();
  Rng rng(seed);
  constexpr std::size_t max_attempts = 100000;
  for (std::size_t s = 0; s < samples; ++s) {
    std::optional<MinorQuery> q;
    for (std::size_t attempt = 0; attempt < max_attempts && !q; ++attempt) {
      const std::size_t k = 1 + rng.below(r);
      MinorQuery candidate(IndexSequence(rng.subset(k, a.rows()), a.rows()),
                           IndexSequence(rng.subset(k, a.cols()), a.cols()));
      if (is_nontrivial(a, candidate, o)) q = std::move(candidate);
    }
    if (!q) throw std::runtime_error("could not draw a nontrivial submatrix");
    const RationalMatrix sub = submatrix(a, *q);
    const bool staircase = o == Orientation::type1 ? is_type1_staircase(sub) : is_type2_staircase(sub);
    if (!staircase) return false;
    const SignVerdict v = detail::strict_sign_regularity(sub, o, false, budget);
    if (!v || *v.signature != parent.signature->truncated(q->order())) return false;
  }
  return true;
}

/// Builds the full report. Precondition failures become verdicts with
/// witnesses; budget overruns propagate.
inline ClassificationReport classify(const RationalMatrix& a, Method method = Method::reduced,
                                     const Budget& budget = {}) {
  ClassificationReport report;
  report.rows = a.rows();
  report.cols = a.cols();
  report.method = method;
  report.staircase = staircase_type(a);
  report.rank = exact_rank(a);
  report.h = compute_h(a);

  if (report.rank != a.rank_bound()) {
    report.witnesses.push_back({std::nullopt, std::nullopt,
                                "rank(A) = " + std::to_string(report.rank) + " < min{m,n} = " +
                                    std::to_string(a.rank_bound())});
    return report;
  }

  const SignVerdict weak = detail::weak_sign_regularity(a, budget);
  const bool staircase = report.staircase != StaircaseType::Neither;
  if (!staircase) {
    report.sign_regular_ignoring_staircase = weak.signature.has_value();
    report.witnesses.push_back({std::nullopt, std::nullopt, "matrix is neither type-I nor type-II staircase"});
    if (weak.witness) report.witnesses.push_back(*weak.witness);
    return report;
  }

  report.is_sr = weak.signature.has_value();
  report.is_tp = report.is_sr && weak.signature->is_all_positive();
  if (weak.witness) report.witnesses.push_back(*weak.witness);

  const Orientation o = orientation_of(report.staircase);
  const SignVerdict strict = detail::strict_sign_regularity(a, o, method == Method::reduced, budget);
  report.is_assr = strict.signature.has_value();
  if (strict.witness) report.witnesses.push_back(*strict.witness);

  if (report.is_assr) {
    report.signature = strict.signature;
    report.h_constraint_holds = check_signature_constraint(*strict.signature, report.h, a.rank_bound());
    if (report.is_sr && *weak.signature != *strict.signature)
      report.witnesses.push_back({std::nullopt, std::nullopt, "ASSR and SR signatures differ"});
  } else if (report.is_sr) {
    report.signature = weak.signature;
  }
  return report;
}

}  // namespace assr
