#pragma once

// Small dense square integer matrices for label bookkeeping. Entries are
// 64-bit; every product is overflow-checked.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octocf/rational.hpp"

namespace octocf {

class IntMatrix {
 public:
  using Entry = std::int64_t;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);
  /// Throws std::invalid_argument unless the rows form a square.
  static IntMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  std::size_t size() const { return n_; }
  Entry operator()(std::size_t r, std::size_t c) const { return a_.at(r * n_ + c); }
  Entry& at(std::size_t r, std::size_t c) { return a_.at(r * n_ + c); }

  std::vector<std::vector<Entry>> rows() const;
  std::vector<Entry> row(std::size_t r) const;

  /// Exact determinant (fraction-free elimination).
  Integer determinant() const;
  bool nonnegative() const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<Entry> a_;
};

struct MatrixMismatch {
  std::size_t row;
  std::size_t col;
  IntMatrix::Entry expected;
  IntMatrix::Entry actual;
  std::string str() const;
};

/// Row-major first entry where the matrices disagree.
std::optional<MatrixMismatch> first_difference(const IntMatrix& expected, const IntMatrix& actual);

}  // namespace octocf
