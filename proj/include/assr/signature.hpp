#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace assr {

/// Sign sequence (eps_1, ..., eps_r) with every eps_k in {+1, -1}.
class Signature {
 public:
  Signature() = default;

  explicit Signature(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
      if (s != 1 && s != -1) throw std::invalid_argument("signature entries must be +1 or -1");
  }
  Signature(std::initializer_list<int> signs) : Signature(std::vector<int>(signs)) {}

  static Signature all_positive(std::size_t r) { return Signature(std::vector<int>(r, 1)); }

  std::size_t size() const noexcept { return signs_.size(); }
  bool empty() const noexcept { return signs_.empty(); }

  /// eps_k for the 1-based order k.
  int at(std::size_t k) const {
    if (k < 1 || k > signs_.size()) throw std::out_of_range("signature order out of range");
    return signs_[k - 1];
  }

  const std::vector<int>& signs() const noexcept { return signs_; }
  auto begin() const noexcept { return signs_.begin(); }
  auto end() const noexcept { return signs_.end(); }

  bool is_all_positive() const {
    return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
  }

  /// (eps_1, ..., eps_k).
  Signature truncated(std::size_t k) const {
    if (k > signs_.size()) throw std::out_of_range("cannot truncate signature beyond its length");
    return Signature(std::vector<int>(signs_.begin(), signs_.begin() + static_cast<long>(k)));
  }

  /// "(-1, 1, -1)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < signs_.size(); ++k) {
      if (k) s += ", ";
      s += std::to_string(signs_[k]);
    }
    return s + ")";
  }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> signs_;
};

}  // namespace assr
