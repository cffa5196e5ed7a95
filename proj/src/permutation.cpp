#include "octocf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "octocf/rational.hpp"

namespace octocf {

Permutation::Permutation(std::vector<std::size_t> images) : img_(std::move(images)) {
  std::vector<bool> hit(img_.size(), false);
  for (std::size_t v : img_) {
    if (v >= img_.size() || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return Permutation(std::move(v));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<std::size_t> v;
  v.reserve(images.size());
  for (int x : images) {
    if (x < 1) throw std::invalid_argument("permutation images are 1-based");
    v.push_back(static_cast<std::size_t>(x - 1));
  }
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text, std::size_t k) {
  std::vector<std::size_t> img(k);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::vector<bool> seen(k, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw ParseError("expected label in cycle notation: " + std::string(text));
      const std::size_t label = std::stoul(std::string(text.substr(i, j - i)));
      if (label < 1 || label > k || seen[label - 1]) throw ParseError("bad label in " + std::string(text));
      seen[label - 1] = true;
      cycle.push_back(label - 1);
      i = j;
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("unterminated cycle: " + std::string(text));
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) img[cycle[c]] = cycle[(c + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(img));
}

std::vector<int> Permutation::to_one_based() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (std::size_t v : img_) out.push_back(static_cast<int>(v) + 1);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::conjugated_by(const Permutation& sigma) const {
  return compose(compose(sigma, *this), sigma.inverse());
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool Permutation::has_cycle(const std::vector<std::size_t>& cycle) const {
  if (cycle.empty()) return false;
  std::vector<std::size_t> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& c : cycles()) {
    std::vector<std::size_t> s = c;
    std::sort(s.begin(), s.end());
    if (s == sorted) return true;
  }
  return false;
}

std::string Permutation::str() const {
  std::string out;
  for (const auto& c : cycles()) {
    out += "(";
    for (std::size_t j = 0; j < c.size(); ++j) out += (j ? "," : "") + std::to_string(c[j] + 1);
    out += ")";
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<std::size_t> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(i));
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace octocf
