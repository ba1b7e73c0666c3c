#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace assr {

/// Strictly increasing list of 1-based indices bounded by n: an element of Q_{k,n}.
class IndexSequence {
 public:
  IndexSequence(std::vector<std::size_t> indices, std::size_t bound)
      : indices_(std::move(indices)), bound_(bound) {
    if (indices_.empty()) throw std::invalid_argument("index sequence must be non-empty");
    for (std::size_t t = 0; t < indices_.size(); ++t) {
      if (indices_[t] < 1) throw std::invalid_argument("index sequence entries are 1-based");
      if (t > 0 && indices_[t] <= indices_[t - 1])
        throw std::invalid_argument("index sequence must be strictly increasing");
    }
    if (indices_.back() > bound_)
      throw std::invalid_argument("index " + std::to_string(indices_.back()) + " exceeds bound " +
                                  std::to_string(bound_));
  }

  IndexSequence(std::initializer_list<std::size_t> indices, std::size_t bound)
      : IndexSequence(std::vector<std::size_t>(indices), bound) {}

  /// (first, first+1, ..., first+length-1).
  static IndexSequence consecutive(std::size_t first, std::size_t length, std::size_t bound) {
    std::vector<std::size_t> v(length);
    for (std::size_t t = 0; t < length; ++t) v[t] = first + t;
    return IndexSequence(std::move(v), bound);
  }

  std::size_t size() const noexcept { return indices_.size(); }
  std::size_t bound() const noexcept { return bound_; }
  std::size_t front() const noexcept { return indices_.front(); }
  std::size_t back() const noexcept { return indices_.back(); }

  /// Element at 1-based position t.
  std::size_t at(std::size_t t) const {
    if (t < 1 || t > indices_.size()) throw std::out_of_range("index sequence position");
    return indices_[t - 1];
  }

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  /// d(alpha) = alpha_k - alpha_1 - (k-1); zero iff consecutive.
  std::size_t gap() const noexcept { return indices_.back() - indices_.front() - (size() - 1); }
  bool is_consecutive() const noexcept { return gap() == 0; }

  /// (1,2,3)
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t t = 0; t < indices_.size(); ++t) {
      if (t) s += ",";
      s += std::to_string(indices_[t]);
    }
    return s + ")";
  }

  friend bool operator==(const IndexSequence& a, const IndexSequence& b) {
    return a.indices_ == b.indices_;
  }
  friend std::strong_ordering operator<=>(const IndexSequence& a, const IndexSequence& b) {
    return a.indices_ <=> b.indices_;
  }

 private:
  friend class SequenceRange;
  IndexSequence() = default;

  std::vector<std::size_t> indices_;
  std::size_t bound_ = 0;
};

inline std::size_t gap(const IndexSequence& alpha) { return alpha.gap(); }

/// C(n, k), saturating at the maximum of uint64.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (r > cap / factor) return cap;
    // r * factor is divisible by i at every step.
    r = r * factor / i;
  }
  return r;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > cap / a) return cap;
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  return b > cap - a ? cap : a + b;
}

/// Number of sequences enumerate_sequences(k, n, consecutive_only) yields.
inline std::uint64_t sequence_count(std::size_t k, std::size_t n, bool consecutive_only) {
  if (k == 0 || k > n) return 0;
  return consecutive_only ? n - k + 1 : binomial(n, k);
}

/// Lazy lexicographic stream over Q_{k,n} (or Q^0_{k,n} when consecutive_only).
class SequenceRange {
 public:
  SequenceRange(std::size_t k, std::size_t n, bool consecutive_only)
      : k_(k), n_(n), consecutive_only_(consecutive_only) {
    if (k < 1 || k > n)
      throw std::invalid_argument("enumerate_sequences requires 1 <= k <= n (k=" +
                                  std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = IndexSequence;
    using difference_type = std::ptrdiff_t;
    using pointer = const IndexSequence*;
    using reference = const IndexSequence&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class SequenceRange;

    iterator(std::size_t k, std::size_t n, bool consecutive_only)
        : consecutive_only_(consecutive_only) {
      current_.bound_ = n;
      current_.indices_.resize(k);
      for (std::size_t t = 0; t < k; ++t) current_.indices_[t] = t + 1;
    }

    void advance() {
      auto& idx = current_.indices_;
      const std::size_t k = idx.size();
      const std::size_t n = current_.bound_;
      if (consecutive_only_) {
        if (idx.back() == n) {
          done_ = true;
          return;
        }
        for (auto& x : idx) ++x;
        return;
      }
      // Rightmost position that can still move: idx[t] < n - (k - 1 - t).
      std::size_t t = k;
      while (t > 0 && idx[t - 1] == n - (k - t)) --t;
      if (t == 0) {
        done_ = true;
        return;
      }
      ++idx[t - 1];
      for (std::size_t s = t; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }

    IndexSequence current_;
    bool consecutive_only_ = false;
    bool done_ = false;
  };

  iterator begin() const { return iterator(k_, n_, consecutive_only_); }
  std::default_sentinel_t end() const noexcept { return {}; }

  std::uint64_t size() const noexcept { return sequence_count(k_, n_, consecutive_only_); }

 private:
  std::size_t k_;
  std::size_t n_;
  bool consecutive_only_;
};

/// Streams Q_{k,n} (or Q^0_{k,n}) in lexicographic order without materializing it.
inline SequenceRange enumerate_sequences(std::size_t k, std::size_t n, bool consecutive_only = false) {
  return SequenceRange(k, n, consecutive_only);
}

}  // namespace assr
