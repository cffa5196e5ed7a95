#pragma once

// Arbitrary-precision integers and reduced rationals.
//
// Rational keeps the canonical form p/q with gcd(p, q) = 1 and q > 0, so
// structural equality is value equality. GMP does the heavy lifting.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octocf {

using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "p/q" and "-p/q" (whitespace not allowed).
  static Rational parse(std::string_view text);
  /// Exact value of a plain decimal literal such as "-12.0625".
  static Rational parse_decimal(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or just "p" when q = 1.
  std::string str() const;
  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_{0};
};

Integer floor(const Rational& r);
Rational abs(const Rational& r);

/// Closest rational to r with denominator at most max_den, via
/// continued-fraction convergents (ties go to the last convergent).
Rational limit_denominator(const Rational& r, const Integer& max_den);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace octocf
