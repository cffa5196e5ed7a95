#pragma once

// Planar vectors, 2x2 matrices and the projective line over Q(√2).

#include <optional>
#include <ostream>
#include <string>

#include "octocf/quadnum.hpp"

namespace octocf {

struct Vec2 {
  QuadNum x;
  QuadNum y;

  Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend Vec2 operator*(const QuadNum& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

/// z-component of a x b; positive when b is counter-clockwise from a.
inline QuadNum cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline QuadNum dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Mirror in the vertical axis, (x, y) -> (-x, y).
inline Vec2 reflect(const Vec2& v) { return {-v.x, v.y}; }

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << v.str(); }

/// [[a, b], [c, d]] acting on column vectors.
struct Mat2 {
  QuadNum a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }

  QuadNum det() const { return a * d - b * c; }
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
  }
  friend Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string str() const;
};

inline std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }

/// Point of RP^1 = Q(√2) ∪ {∞}.
class ProjVal {
 public:
  ProjVal(QuadNum v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ProjVal(T v) : value_(QuadNum(v)) {}  // NOLINT(google-explicit-constructor)
  static ProjVal infinity() { return ProjVal(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on ∞.
  const QuadNum& value() const;

  friend bool operator==(const ProjVal&, const ProjVal&) = default;
  std::string str() const { return is_infinite() ? "inf" : value_->str(); }

 private:
  ProjVal() = default;
  std::optional<QuadNum> value_;
};

inline std::ostream& operator<<(std::ostream& os, const ProjVal& p) { return os << p.str(); }

/// u -> (a u + b) / (c u + d) on RP^1; requires det(m) != 0.
ProjVal moebius(const Mat2& m, const ProjVal& u);

}  // namespace octocf
