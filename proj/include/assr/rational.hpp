#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace assr {

/// Exact rational number backed by GMP. Always kept in canonical form:
/// positive denominator, numerator and denominator coprime.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  Rational(const mpz_class& numerator, const mpz_class& denominator)
      : value_(numerator, denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
  }

  /// Parses an optional sign followed by an integer, a finite decimal
  /// ("12.5", ".5", "3."), a scientific decimal ("-1e-6", "2.5E+3") or a
  /// fraction "p/q". The conversion is exact.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Nearest double (round-to-nearest-even).
  double to_double() const {
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, value_.get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

namespace detail {

inline bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return std::invalid_argument("invalid number '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw fail("empty");

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw fail("sign without digits");

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (num.empty() || den.empty() || !detail::all_digits(num) || !detail::all_digits(den))
      throw fail("fraction needs digits on both sides of '/'");
    mpz_class p{std::string(num)}, q{std::string(den)};
    if (q == 0) throw fail("zero denominator");
    if (negative) p = -p;
    return Rational(p, q);
  }

  std::string_view mantissa = body;
  long exponent = 0;
  if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || !detail::all_digits(exp_text) || exp_text.size() > 6)
      throw fail("bad exponent");
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    const auto whole = mantissa.substr(0, dot);
    const auto frac = mantissa.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail("no digits");
    if (!detail::all_digits(whole) || !detail::all_digits(frac)) throw fail("unexpected character");
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (mantissa.empty() || !detail::all_digits(mantissa)) throw fail("unexpected character");
    digits = std::string(mantissa);
  }

  mpz_class num(digits);
  if (negative) num = -num;
  const long scale = exponent - fraction_digits;
  if (scale >= 0) return Rational(mpz_class(num * detail::pow10(static_cast<unsigned long>(scale))));
  return Rational(num, detail::pow10(static_cast<unsigned long>(-scale)));
}

}  // namespace assr
