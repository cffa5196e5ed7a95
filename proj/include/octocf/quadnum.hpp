#pragma once

// Exact arithmetic in the real quadratic field Q(sqrt D).
//
// A value a + b*sqrt(D) is stored as the pair (a, b) of reduced rationals;
// since sqrt(D) is irrational for the radicands used here, the pair is
// unique and equality is component-wise. Every ordering question reduces to
// qsign(), which decides the sign of a + b*sqrt(D) with integer arithmetic
// only. QuadNum = Quadratic<2> carries all of the octagon geometry.

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "octocf/rational.hpp"

namespace octocf {

template <int D>
class Quadratic {
  static_assert(D == 2 || D == 3 || D == 5 || D == 6 || D == 7, "radicand must be square-free");

 public:
  static constexpr int kRadicand = D;

  Quadratic() = default;
  Quadratic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  Quadratic(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Quadratic(T a) : a_(a) {}  // NOLINT(google-explicit-constructor)

  /// sqrt(D) itself.
  static Quadratic root() { return Quadratic(Rational(0), Rational(1)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  Quadratic conjugate() const { return Quadratic(a_, -b_); }
  /// Field norm a^2 - D b^2; zero only for zero.
  Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

  Quadratic inverse() const {
    if (is_zero()) throw DivisionByZero();
    const Rational n = norm();
    return Quadratic(a_ / n, -b_ / n);
  }

  Quadratic operator-() const { return Quadratic(-a_, -b_); }
  Quadratic& operator+=(const Quadratic& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Quadratic& operator-=(const Quadratic& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Quadratic& operator*=(const Quadratic& o) {
    Rational na = a_ * o.a_ + Rational(D) * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }

  friend bool operator==(const Quadratic& x, const Quadratic& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const Quadratic& x, const Quadratic& y) {
    const int s = qsign(x - y);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Human-readable form such as "1+√2", "-3/2√2" or "0".
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

using QuadNum = Quadratic<2>;

/// Sign of a + b*sqrt(D), exactly.
template <int D>
int qsign(const Quadratic<D>& q) {
  const int sa = q.a().sign();
  const int sb = q.b().sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and D b^2 wins.
  const int c = (q.a() * q.a() <=> Rational(D) * q.b() * q.b()) < 0 ? -1 : 1;
  return c > 0 ? sa : sb;
}

template <int D>
Quadratic<D> abs(const Quadratic<D>& q) {
  return qsign(q) < 0 ? -q : q;
}

/// Largest integer n with n <= q.
template <int D>
Integer floor(const Quadratic<D>& q) {
  const Rational& a = q.a();
  const Rational& b = q.b();
  if (b.is_zero()) return floor(a);
  // b*sqrt(D) lies strictly between two consecutive integers s and s+1
  // (signed), so floor(q) is one of a few candidates; settle it exactly.
  const Integer den = a.denominator() * b.denominator();
  const Integer bn = b.numerator() * a.denominator();
  const Integer an = a.numerator() * b.denominator();
  Integer s = isqrt(Integer(D) * bn * bn);
  if (bn < 0) s = -s - 1;
  Integer n = floor(Rational(an + s, den));
  while (qsign(q - Quadratic<D>(Rational(n))) < 0) n -= 1;
  while (qsign(q - Quadratic<D>(Rational(Integer(n + 1)))) >= 0) n += 1;
  return n;
}

/// Decimal rendering with exactly `digits` places, rounded half away from
/// zero. Display only: the value is exact, the string is not.
template <int D>
std::string to_decimal(const Quadratic<D>& q, std::size_t digits);

/// Parses "p/q", "p/q+r/s√2", "√2", "-1/2√2", "3-2sqrt2" and the like.
/// Only D = 2 has a textual form.
QuadNum parse_quadnum(std::string_view text);

template <int D>
std::ostream& operator<<(std::ostream& os, const Quadratic<D>& q) {
  return os << q.str();
}

extern template class Quadratic<2>;
extern template class Quadratic<5>;
extern template std::string to_decimal(const Quadratic<2>&, std::size_t);
extern template std::string to_decimal(const Quadratic<5>&, std::size_t);

}  // namespace octocf
