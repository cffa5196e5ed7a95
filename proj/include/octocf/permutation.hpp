#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace octocf {

/// Bijection of {0, ..., k-1}. Text and JSON forms are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t k);
  /// Cycle notation such as "(1,2)(3)" over {1..k}; omitted points are fixed.
  static Permutation parse(std::string_view cycles, std::size_t k);
  static Permutation from_one_based(const std::vector<int>& images);

  std::size_t size() const { return img_.size(); }
  std::size_t operator()(std::size_t i) const { return img_.at(i); }
  const std::vector<std::size_t>& images() const { return img_; }
  std::vector<int> to_one_based() const;

  Permutation inverse() const;
  /// sigma ∘ this ∘ sigma^{-1}.
  Permutation conjugated_by(const Permutation& sigma) const;
  /// Cycles (fixed points included), each starting at its least element,
  /// ordered by that element.
  std::vector<std::vector<std::size_t>> cycles() const;
  bool has_cycle(const std::vector<std::size_t>& cycle) const;

  std::string str() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> img_;
};

/// (a ∘ b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

/// Every permutation of {0..k-1} in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t k);

}  // namespace octocf
