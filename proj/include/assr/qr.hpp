#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "assr/classify.hpp"
#include "assr/errors.hpp"
#include "assr/matrix.hpp"
#include "assr/minors.hpp"

namespace assr {

struct QRPair {
  RealMatrix q;  // m x n, orthonormal columns
  RealMatrix r;  // n x n, upper triangular, positive diagonal
  double tol = 1e-10;
};

struct QROptions {
  /// A column whose norm after projection falls below rank_tol times its
  /// original norm is treated as dependent.
  double rank_tol = 1e-12;
  /// Tolerance stored in the result for later verification.
  double tol = 1e-10;
};

/// Column-oriented modified Gram-Schmidt. For k = 1..n: copy column k,
/// subtract its projection on each finished q_i in turn (r_ik = <q_i, v>),
/// then r_kk = ||v||_2 and q_k = v / r_kk. Summation order is fixed.
inline QRPair mgs_qr(const RealMatrix& a, const QROptions& options = {}) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m < n) throw std::invalid_argument("mgs_qr requires m >= n");
  RealMatrix q(m, n, 0.0);
  RealMatrix r(n, n, 0.0);
  std::vector<double> v(m);
  for (std::size_t k = 1; k <= n; ++k) {
    double original = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
      v[i - 1] = a(i, k);
      original += v[i - 1] * v[i - 1];
    }
    original = std::sqrt(original);
    for (std::size_t i = 1; i < k; ++i) {
      double dot = 0.0;
      for (std::size_t row = 1; row <= m; ++row) dot += q(row, i) * v[row - 1];
      r(i, k) = dot;
      for (std::size_t row = 1; row <= m; ++row) v[row - 1] -= dot * q(row, i);
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0 || norm < options.rank_tol * original) throw rank_deficiency_error(k);
    r(k, k) = norm;
    for (std::size_t row = 1; row <= m; ++row) q(row, k) = v[row - 1] / norm;
  }
  return {std::move(q), std::move(r), options.tol};
}

/// max |(Q^T Q - I)_ij|
inline double orthonormality_residual(const RealMatrix& q) {
  double worst = 0.0;
  for (std::size_t i = 1; i <= q.cols(); ++i)
    for (std::size_t j = 1; j <= q.cols(); ++j) {
      double dot = 0.0;
      for (std::size_t row = 1; row <= q.rows(); ++row) dot += q(row, i) * q(row, j);
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

inline bool verify_orthonormal(const RealMatrix& q, double tol) { return orthonormality_residual(q) <= tol; }

/// max |A - QR|
inline double reconstruction_residual(const RealMatrix& a, const QRPair& qr) {
  double worst = 0.0;
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = 1; j <= a.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 1; k <= j; ++k) s += qr.q(i, k) * qr.r(k, j);
      worst = std::max(worst, std::abs(a(i, j) - s));
    }
  return worst;
}

struct RealWitness {
  MinorQuery query;
  double value;
  double threshold;

  friend bool operator==(const RealWitness&, const RealWitness&) = default;
};

struct TpCheck {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<RealWitness> failures;

  explicit operator bool() const noexcept { return passed; }
  friend bool operator==(const TpCheck&, const TpCheck&) = default;
};

/// Product of the k largest column norms of R: an upper bound on any order-k minor.
inline std::vector<double> minor_scales(const RealMatrix& r) {
  std::vector<double> norms;
  for (std::size_t j = 1; j <= r.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 1; i <= r.rows(); ++i) s += r(i, j) * r(i, j);
    norms.push_back(std::sqrt(s));
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  std::vector<double> scale(norms.size() + 1, 1.0);
  for (std::size_t k = 1; k <= norms.size(); ++k) scale[k] = scale[k - 1] * norms[k - 1];
  return scale;
}

/// R is TP when every minor over Q_{k,n} x Q_{k,n} is >= -tol * scale(k).
inline TpCheck verify_r_tp(const RealMatrix& r, double tol, const Budget& budget = {}) {
  if (r.rows() != r.cols()) throw std::invalid_argument("verify_r_tp expects a square R");
  for (std::size_t i = 2; i <= r.rows(); ++i)
    for (std::size_t j = 1; j < i; ++j)
      if (r(i, j) != 0.0) throw precondition_error("verify_r_tp expects an upper triangular R");
  const std::size_t n = r.rows();
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= n; ++k) total = saturating_add(total, query_count(n, n, k, false));
  budget.charge(total);
  const std::vector<double> scale = minor_scales(r);
  TpCheck out;
  for (std::size_t k = 1; k <= n; ++k) {
    const double threshold = -tol * scale[k];
    for_each_query(n, n, k, false, Budget{total}, [&](const MinorQuery& q) {
      const double v = determinant(submatrix(r, q));
      ++out.checked;
      if (v < threshold) {
        out.passed = false;
        out.failures.push_back({q, v, threshold});
      }
      return true;
    });
  }
  return out;
}

struct BoundaryViolation {
  MinorQuery query;
  double value;
  int expected_sign;

  friend bool operator==(const BoundaryViolation&, const BoundaryViolation&) = default;
};

struct BoundarySignReport {
  std::size_t checked = 0;
  std::vector<BoundaryViolation> violations;
  std::vector<MinorQuery> zero_block_failures;

  bool passed() const noexcept { return violations.empty() && zero_block_failures.empty(); }
  friend bool operator==(const BoundarySignReport&, const BoundarySignReport&) = default;
};

struct BoundaryCheckOptions {
  /// Entries of Q[alpha | beta_1 - 1] count as zero below zero_tol * max|q_ij|.
  double zero_tol = 1e-10;
  /// eps_k det Q[alpha|beta] must exceed this margin.
  double sign_margin = 1e-10;
};

/// For every consecutive column boundary minor det A[alpha|beta] of a type-I
/// ASSR matrix: Q[alpha | beta_1 - 1] must vanish when beta_1 > 1 and
/// eps_k det Q[alpha|beta] must be positive.
inline BoundarySignReport check_boundary_transfer(const RationalMatrix& a, const QRPair& qr,
                                                  const BoundaryCheckOptions& options = {},
                                                  const Budget& budget = {}) {
  if (!is_type1_staircase(a)) throw precondition_error("check_boundary_transfer requires a type-I staircase matrix");
  if (qr.q.rows() != a.rows() || qr.q.cols() != a.cols())
    throw precondition_error("QR factors do not match the matrix dimensions");
  const SignVerdict verdict = is_assr_reduced(a, budget);
  if (!verdict) throw precondition_error("check_boundary_transfer requires an ASSR matrix");
  const Signature& eps = *verdict.signature;

  const double zero_threshold = options.zero_tol * max_abs(qr.q);
  BoundarySignReport report;
  for (std::size_t k = 1; k <= a.cols(); ++k) {
    for_each_query(a.rows(), a.cols(), k, true, budget, [&](const MinorQuery& q) {
      if (!classify_boundary(a, q, Orientation::type1).column_boundary) return true;
      ++report.checked;
      const std::size_t left = q.cols.front();
      if (left > 1) {
        for (std::size_t row : q.rows)
          if (std::abs(qr.q(row, left - 1)) > zero_threshold) {
            report.zero_block_failures.push_back(q);
            break;
          }
      }
      const double det = minor(qr.q, q);
      if (eps.at(k) * det <= options.sign_margin) report.violations.push_back({q, det, eps.at(k)});
      return true;
    });
  }
  return report;
}

/// |det A[alpha|beta] - sum_{omega in Q_{k,n}} det Q[alpha|omega] det R[omega|beta]|
inline double cauchy_binet_residual(const RealMatrix& a, const QRPair& qr, const MinorQuery& q,
                                    const Budget& budget = {}) {
  check_query(a, q);
  const std::size_t n = qr.r.rows();
  if (q.order() > n) throw std::invalid_argument("minor order exceeds n");
  budget.charge(sequence_count(q.order(), n, false));
  const double lhs = minor(a, q);
  double sum = 0.0;
  for (const IndexSequence& omega : enumerate_sequences(q.order(), n, false))
    sum += determinant(submatrix(qr.q, q.rows, omega)) * determinant(submatrix(qr.r, omega, q.cols));
  return std::abs(lhs - sum);
}

/// k! * max(1, max|a_ij|)^k: a bound on the magnitude of any order-k minor.
inline double cauchy_binet_scale(const RealMatrix& a, std::size_t k) {
  const double entry = std::max(1.0, max_abs(a));
  double s = 1.0;
  for (std::size_t i = 1; i <= k; ++i) s *= static_cast<double>(i) * entry;
  return s;
}

}  // namespace assr
