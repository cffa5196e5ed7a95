#include "octocf/intmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace octocf {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw std::invalid_argument("IntMatrix: rows do not form a square");
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<IntMatrix::Entry>> IntMatrix::rows() const {
  std::vector<std::vector<Entry>> out;
  for (std::size_t r = 0; r < n_; ++r) out.push_back(row(r));
  return out;
}

std::vector<IntMatrix::Entry> IntMatrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * n_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_)};
}

Integer IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  // Bareiss: every intermediate division is exact.
  std::vector<Integer> m(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) m[i] = static_cast<long>(a_[i]);
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n_ + c]; };
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n_; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n_ && at(p, k) == 0) ++p;
      if (p == n_) return 0;
      for (std::size_t c = 0; c < n_; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

bool IntMatrix::nonnegative() const {
  for (Entry v : a_) {
    if (v < 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("IntMatrix: size mismatch");
  IntMatrix out(x.n_);
  for (std::size_t r = 0; r < x.n_; ++r) {
    for (std::size_t c = 0; c < x.n_; ++c) {
      IntMatrix::Entry acc = 0;
      for (std::size_t k = 0; k < x.n_; ++k) {
        IntMatrix::Entry term;
        if (__builtin_mul_overflow(x(r, k), y(k, c), &term) || __builtin_add_overflow(acc, term, &acc)) {
          throw std::overflow_error("IntMatrix: 64-bit overflow in product");
        }
      }
      out.at(r, c) = acc;
    }
  }
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < n_; ++r) {
    os << (r ? "\n" : "") << "[";
    for (std::size_t c = 0; c < n_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]";
  }
  return os.str();
}

std::string MatrixMismatch::str() const {
  return "entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + "): expected " +
         std::to_string(expected) + ", got " + std::to_string(actual);
}

std::optional<MatrixMismatch> first_difference(const IntMatrix& expected, const IntMatrix& actual) {
  if (expected.size() != actual.size()) return MatrixMismatch{0, 0, static_cast<IntMatrix::Entry>(expected.size()),
                                                             static_cast<IntMatrix::Entry>(actual.size())};
  for (std::size_t r = 0; r < expected.size(); ++r) {
    for (std::size_t c = 0; c < expected.size(); ++c) {
      if (expected(r, c) != actual(r, c)) return MatrixMismatch{r, c, expected(r, c), actual(r, c)};
    }
  }
  return std::nullopt;
}

}  // namespace octocf
