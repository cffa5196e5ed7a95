#pragma once

// The octagon Farey map F = gamma ∘ fold on directions of the upper half
// plane, its itineraries ("octagon Farey expansions") and the inverse-branch
// reconstruction of the nested intervals they encode.
//
// Directions are kept as vectors rather than angles: theta = 0 and
// theta = pi share u = cot(theta) = ∞ but are different points here.

#include <cstddef>
#include <string>
#include <vector>

#include "octocf/geometry.hpp"

namespace octocf::farey {

/// A direction theta in [0, pi], stored projectively as a vector with
/// y > 0, or y = 0 and x != 0 (x > 0 is theta = 0, x < 0 is theta = pi).
class Direction {
 public:
  /// Any nonzero vector; a vector with y < 0 is replaced by its negative.
  explicit Direction(Vec2 v);
  /// (u, 1).
  static Direction from_u(const QuadNum& u);
  /// Finite u as (u, 1); ∞ as theta = 0 (`negative_side` false) or pi.
  static Direction from_projective(const ProjVal& u, bool negative_side = false);

  const Vec2& vec() const { return v_; }
  /// Inverse slope u = x / y, ∞ on the horizontal.
  ProjVal u() const;
  bool is_horizontal() const { return v_.y.is_zero(); }

  /// Same point of [0, pi].
  bool same_as(const Direction& o) const;
  /// Strictly smaller angle theta.
  bool before(const Direction& o) const;

  std::string str() const;

 private:
  Vec2 v_;
};

/// Index j of the closed sector [j pi / 8, (j+1) pi / 8].
using SectorIndex = int;

/// Exact direction at angle j pi / 8, j = 0..8.
Direction boundary_direction(int j);

/// The dihedral element nu_j mapping sector j linearly onto sector 0.
const Mat2& nu(SectorIndex j);
/// gamma = [[-1, 2(1+√2)], [0, 1]].
const Mat2& gamma();
/// gamma * nu_j, the branch F_j.
const Mat2& branch(SectorIndex j);

/// All sectors containing d: one index, or two on an interior boundary.
std::vector<SectorIndex> classify(const Direction& d);

enum class TiePolicy {
  /// Lowest index, except that sector 0 loses a tie against sector 1.
  Low,
  High,
};

SectorIndex choose(const std::vector<SectorIndex>& candidates, TiePolicy policy);

struct FoldResult {
  SectorIndex sector;
  Direction folded;
};

/// fold(d) = nu_j d in sector 0.
FoldResult fold(const Direction& d, TiePolicy policy = TiePolicy::Low);

struct StepResult {
  SectorIndex sector;
  Direction image;
  bool on_boundary = false;
};

/// One application of F: the image is gamma nu_j d.
StepResult farey_step(const Direction& d, TiePolicy policy = TiePolicy::Low);

struct FareyExpansion {
  std::vector<int> entries;
  bool boundary_hit = false;
  bool terminating = false;

  /// s_k = 0 only for k = 0, entries within 0..7.
  bool admissible() const;
  std::string str() const;
  friend bool operator==(const FareyExpansion&, const FareyExpansion&) = default;
};

/// First `depth` entries of the itinerary of d under F.
FareyExpansion expand(const Direction& d, std::size_t depth, TiePolicy policy = TiePolicy::Low);

/// Closed arc of directions [start, end] with theta(start) <= theta(end).
struct RP1Interval {
  Direction start;
  Direction end;

  ProjVal u_lo() const { return end.u(); }
  ProjVal u_hi() const { return start.u(); }
  bool contains(const Direction& d) const;
  bool contains(const RP1Interval& inner) const;
  std::string str() const;
};

/// F_{s0}^{-1} ... F_{s_{k-1}}^{-1} (sector s_k), the set of directions
/// whose expansion begins with the given prefix.
RP1Interval reconstruct(const std::vector<int>& prefix);

/// reconstruct() of every nonempty initial segment, in one pass.
std::vector<RP1Interval> nested_intervals(const std::vector<int>& prefix);

/// The other expansion of a terminating direction (or the input itself
/// when no admissible partner exists).
FareyExpansion dual_expansion(const FareyExpansion& e);

}  // namespace octocf::farey
