#pragma once

// Torus baseline: the Gauss map and the geometric construction of
// continued-fraction convergents as lattice vectors hugging the line in
// direction (alpha, 1).
//
// Everything is templated on the quadratic field so that both Q(√2) and
// Q(√5) (golden ratio) inputs are handled exactly. Rationals are the b = 0
// elements of either field.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "octocf/quadnum.hpp"

namespace octocf::classical {

/// Integer lattice vector (p, q); p is the horizontal coordinate.
struct IntVec2 {
  Integer p;
  Integer q;
  friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

inline Integer cross(const IntVec2& a, const IntVec2& b) { return a.p * b.q - a.q * b.p; }

/// Consecutive convergents e_{n-1}, e_n; always a basis of Z^2.
struct ConvergentPair {
  IntVec2 e_prev;
  IntVec2 e_curr;
  std::size_t index = 0;
};

template <int D>
struct GaussStep {
  Integer digit;
  Quadratic<D> rest;
};

/// One step of G(x) = {1/x}. Requires 0 < x < 1.
template <int D>
GaussStep<D> gauss_step(const Quadratic<D>& x) {
  if (qsign(x) <= 0 || qsign(x - Quadratic<D>(1)) >= 0) {
    throw std::domain_error("gauss_step: argument outside (0, 1): " + x.str());
  }
  const Quadratic<D> inv = x.inverse();
  Integer digit = floor(inv);
  return {digit, inv - Quadratic<D>(Rational(digit))};
}

struct ConvergentRun {
  /// e_0, e_1, ... in order of construction.
  std::vector<IntVec2> convergents;
  /// a_n with e_n = a_n e_{n-1} + e_{n-2}.
  std::vector<Integer> digits;
  /// intermediates[n] = { i e_{n-1} + e_{n-2} : i = 1 .. a_n - 1 }.
  std::vector<std::vector<IntVec2>> intermediates;
  /// True when the last vector landed on the line (rational alpha).
  bool halted = false;

  /// (e_{n-1}, e_n) with e_{-1} = (1, 0).
  ConvergentPair pair(std::size_t n) const {
    return {n == 0 ? IntVec2{1, 0} : convergents.at(n - 1), convergents.at(n), n};
  }
};

/// Starting from e_{-2} = (0, 1), e_{-1} = (1, 0), repeatedly adds e_{n-1}
/// to e_{n-2} as often as possible without crossing the line through
/// (alpha, 1). Produces at most `count` convergents; stops early with
/// `halted` when a vector falls exactly on the line.
template <int D>
ConvergentRun geometric_convergents(const Quadratic<D>& alpha, std::size_t count) {
  using Q = Quadratic<D>;
  if (qsign(alpha) <= 0) throw std::domain_error("geometric_convergents: alpha must be positive");
  // side(e) = cross((alpha, 1), e) = alpha q - p
  auto side = [&](const IntVec2& e) { return alpha * Q(Rational(e.q)) - Q(Rational(e.p)); };

  ConvergentRun run;
  IntVec2 older{0, 1};
  IntVec2 newer{1, 0};
  Q c_older = side(older);
  Q c_newer = side(newer);
  while (run.convergents.size() < count) {
    const Integer a = floor(-c_older / c_newer);
    std::vector<IntVec2> inter;
    for (Integer i = 1; i < a; ++i) inter.push_back({older.p + i * newer.p, older.q + i * newer.q});
    IntVec2 next{older.p + a * newer.p, older.q + a * newer.q};
    Q c_next = c_older + Q(Rational(a)) * c_newer;
    run.convergents.push_back(next);
    run.digits.push_back(a);
    run.intermediates.push_back(std::move(inter));
    if (c_next.is_zero()) {
      run.halted = true;
      break;
    }
    older = newer;
    newer = next;
    c_older = c_newer;
    c_newer = c_next;
  }
  return run;
}

/// Intermediate (first-kind) approximations grouped per step.
template <int D>
std::vector<std::vector<IntVec2>> intermediate_convergents(const Quadratic<D>& alpha, std::size_t count) {
  return geometric_convergents(alpha, count).intermediates;
}

/// Full and intermediate convergents interleaved in construction order:
/// for each step, its intermediates followed by e_n.
std::vector<IntVec2> approximation_sequence(const ConvergentRun& run);

inline Quadratic<5> golden_ratio() { return {Rational(1, 2), Rational(1, 2)}; }

}  // namespace octocf::classical
