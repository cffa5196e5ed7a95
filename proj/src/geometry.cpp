#include "octocf/geometry.hpp"

#include <stdexcept>

namespace octocf {

Mat2 Mat2::inverse() const {
  const QuadNum det_inv = det().inverse();
  return {d * det_inv, -b * det_inv, -c * det_inv, a * det_inv};
}

std::string Mat2::str() const {
  return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

const QuadNum& ProjVal::value() const {
  if (!value_) throw std::logic_error("ProjVal::value() on infinity");
  return *value_;
}

ProjVal moebius(const Mat2& m, const ProjVal& u) {
  if (m.det().is_zero()) throw std::invalid_argument("moebius: singular matrix");
  if (u.is_infinite()) {
    if (m.c.is_zero()) return ProjVal::infinity();
    return ProjVal(m.a / m.c);
  }
  const QuadNum den = m.c * u.value() + m.d;
  if (den.is_zero()) return ProjVal::infinity();
  return ProjVal((m.a * u.value() + m.b) / den);
}

}  // namespace octocf
