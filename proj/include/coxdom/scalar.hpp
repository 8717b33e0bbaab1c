#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "coxdom/error.hpp"

namespace coxdom {

enum class Ordering { less, equal, greater };

/*
  Scalar backends.

  All real quantities of the library (form values, chain coefficients,
  root coordinates) are carried by one of two interchangeable scalar
  types:

    Tol  -- double with a global comparison tolerance.  The default and
            the only backend that accepts arbitrary bond labels, since
            -cos(pi/m) is irrational for most m.
    Rat  -- exact rational via boost::multiprecision.  Selectable when
            every Gram entry is rational (bonds in {2,3} plus rational
            values on infinite bonds); performs no rounding and serves
            as the oracle backend in tests.

  Comparisons go through cmp(); the scalar types deliberately do not
  expose operator== so that tolerance handling cannot be bypassed by
  accident.  Deduplication uses key(), which is a separate, coarser
  notion than cmp-equality (see RootStore).
*/

class Tol {
 public:
  using Key = std::int64_t;

  Tol() = default;
  Tol(double v) : v_(v) {}

  static Tol zero() { return Tol(0.0); }
  static Tol one() { return Tol(1.0); }
  static Tol from_int(long long n) { return Tol(static_cast<double>(n)); }
  static Tol from_fraction(long long num, long long den) {
    return Tol(static_cast<double>(num) / static_cast<double>(den));
  }

  // Gram entry for a finite bond label m >= 2.
  static std::optional<Tol> minus_cos_pi_over(unsigned m) {
    if (m < 2) return std::nullopt;
    if (m == 2) return Tol(0.0);
    return Tol(-std::cos(M_PI / static_cast<double>(m)));
  }

  static std::optional<Tol> parse(std::string_view text);

  static constexpr bool exact() { return false; }
  static const char* backend_name() { return "float"; }

  // Shared comparison tolerance.  Configured once at startup (the CLI
  // sets it from --epsilon) before any computation begins.
  static double& epsilon() {
    static double eps = 1e-9;
    return eps;
  }

  double to_double() const { return v_; }

  // Dedup key: the value rounded to 12 decimal digits.  Distinct roots in
  // the supported depth window are separated by far more than 1e-12; the
  // residual caveat is documented in the README.
  Key key() const {
    const double scaled = v_ * 1e12;
    if (!(scaled > -9.0e18 && scaled < 9.0e18))
      fail(ErrorKind::cap_exceeded, "coefficient exceeds dedup key range");
    return static_cast<Key>(std::llround(scaled));
  }

  std::string str() const {
    if (v_ == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v_);
    return buf;
  }

  Tol operator-() const { return Tol(-v_); }
  Tol& operator+=(const Tol& o) { v_ += o.v_; return *this; }
  Tol& operator-=(const Tol& o) { v_ -= o.v_; return *this; }
  Tol& operator*=(const Tol& o) { v_ *= o.v_; return *this; }
  Tol& operator/=(const Tol& o) { v_ /= o.v_; return *this; }

  friend Tol operator+(Tol a, const Tol& b) { return a += b; }
  friend Tol operator-(Tol a, const Tol& b) { return a -= b; }
  friend Tol operator*(Tol a, const Tol& b) { return a *= b; }
  friend Tol operator/(Tol a, const Tol& b) { return a /= b; }

  friend Ordering cmp(const Tol& a, const Tol& b) {
    const double d = a.v_ - b.v_;
    if (d <= epsilon() && d >= -epsilon()) return Ordering::equal;
    return d < 0 ? Ordering::less : Ordering::greater;
  }

 private:
  double v_ = 0.0;
};

inline std::optional<Tol> Tol::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string s(text);
  // Accept "p/q" as well as decimals, mirroring the rational backend.
  if (auto slash = s.find('/'); slash != std::string::npos) {
    char* end = nullptr;
    const double num = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + slash) return std::nullopt;
    const char* dstart = s.c_str() + slash + 1;
    const double den = std::strtod(dstart, &end);
    if (*end != '\0' || den == 0.0) return std::nullopt;
    return Tol(num / den);
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return Tol(v);
}

class Rat {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Key = Rational;

  Rat() = default;
  Rat(Rational v) : v_(std::move(v)) {}
  explicit Rat(long long n) : v_(n) {}

  static Rat zero() { return Rat(Rational(0)); }
  static Rat one() { return Rat(Rational(1)); }
  static Rat from_int(long long n) { return Rat(Rational(n)); }
  static Rat from_fraction(long long num, long long den) {
    if (den == 0) fail(ErrorKind::parse_error, "zero denominator");
    return Rat(Rational(num) / Rational(den));
  }

  // Only m in {2,3} has a rational Gram entry; all other finite labels
  // require the float backend.
  static std::optional<Rat> minus_cos_pi_over(unsigned m) {
    if (m == 2) return Rat(Rational(0));
    if (m == 3) return from_fraction(-1, 2);
    return std::nullopt;
  }

  static std::optional<Rat> parse(std::string_view text);

  static constexpr bool exact() { return true; }
  static const char* backend_name() { return "rational"; }

  double to_double() const { return v_.convert_to<double>(); }
  const Rational& value() const { return v_; }
  Key key() const { return v_; }

  std::string str() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(v_) == 1) return numerator(v_).str();
    return numerator(v_).str() + "/" + denominator(v_).str();
  }

  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) fail(ErrorKind::internal, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend Ordering cmp(const Rat& a, const Rat& b) {
    if (a.v_ == b.v_) return Ordering::equal;
    return a.v_ < b.v_ ? Ordering::less : Ordering::greater;
  }

 private:
  Rational v_;
};

inline std::optional<Rat> Rat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    try {
      Rat::Rational num(s.substr(0, slash));
      Rat::Rational den(s.substr(slash + 1));
      if (den == 0) return std::nullopt;
      return Rat(num / den);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  // Decimal form: sign, integer part, optional fraction.  Parsed exactly.
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    if (s[i] >= '0' && s[i] <= '9') {
      digits.push_back(s[i]);
      if (seen_dot) ++frac_len;
      seen_digit = true;
    } else if (s[i] == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  Rat::Rational num{boost::multiprecision::cpp_int(digits.empty() ? "0" : digits)};
  Rat::Rational den(1);
  for (long k = 0; k < frac_len; ++k) den *= 10;
  Rat::Rational v = num / den;
  if (neg) v = -v;
  return Rat(v);
}

// Small comparison helpers used throughout the library.
template <class S>
inline bool sc_eq(const S& a, const S& b) { return cmp(a, b) == Ordering::equal; }
template <class S>
inline bool sc_lt(const S& a, const S& b) { return cmp(a, b) == Ordering::less; }
template <class S>
inline bool sc_gt(const S& a, const S& b) { return cmp(a, b) == Ordering::greater; }
template <class S>
inline bool sc_le(const S& a, const S& b) { return cmp(a, b) != Ordering::greater; }
template <class S>
inline bool sc_ge(const S& a, const S& b) { return cmp(a, b) != Ordering::less; }

// -1, 0, +1 against zero under the backend's comparison.
template <class S>
inline int sign_of(const S& a) {
  switch (cmp(a, S::zero())) {
    case Ordering::less: return -1;
    case Ordering::equal: return 0;
    case Ordering::greater: return 1;
  }
  return 0;
}

}  // namespace coxdom
