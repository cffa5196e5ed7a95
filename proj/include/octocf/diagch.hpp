#pragma once

// Diagonal changes on labeled quadrangulations of a translation surface.
//
// A quadrangulation with k quadrilaterals is stored as 2k holonomy vectors
// ordered (1,l),(1,r),...,(k,l),(k,r) together with the gluing permutations
// pi_l, pi_r. Labels are 0-based in code and 1-based in text and JSON.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "octocf/farey.hpp"
#include "octocf/geometry.hpp"
#include "octocf/intmatrix.hpp"
#include "octocf/permutation.hpp"

namespace octocf::diagch {

using farey::Direction;

class InvalidQuadrangulation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TrainTrackViolation : public InvalidQuadrangulation {
 public:
  using InvalidQuadrangulation::InvalidQuadrangulation;
};

/// Raised when a move is requested that is not well-slanted.
class MoveUnavailable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct CombDatum {
  Permutation pi_l;
  Permutation pi_r;

  std::size_t k() const { return pi_l.size(); }
  friend bool operator==(const CombDatum&, const CombDatum&) = default;
  std::string str() const { return "pi_l=" + pi_l.str() + " pi_r=" + pi_r.str(); }
};

struct Wedge {
  Vec2 left;
  Vec2 right;
  friend bool operator==(const Wedge&, const Wedge&) = default;
};

/// Index of (i,l) and (i,r) in the 2k-vector.
constexpr std::size_t lslot(std::size_t i) { return 2 * i; }
constexpr std::size_t rslot(std::size_t i) { return 2 * i + 1; }

class LabeledQuadrangulation {
 public:
  /// Validates train-track relations, positive simple quadrilaterals and
  /// that ref_dir lies strictly inside every wedge.
  LabeledQuadrangulation(CombDatum comb, std::vector<Wedge> wedges,
                         Direction ref_dir = Direction(Vec2{0, 1}));
  /// Same, from the flat (1,l),(1,r),... vector list.
  static LabeledQuadrangulation from_vectors(CombDatum comb, std::vector<Vec2> vecs,
                                             Direction ref_dir = Direction(Vec2{0, 1}));

  std::size_t k() const { return comb_.k(); }
  const CombDatum& comb() const { return comb_; }
  const std::vector<Vec2>& vectors() const { return vecs_; }
  const Vec2& left(std::size_t i) const { return vecs_.at(lslot(i)); }
  const Vec2& right(std::size_t i) const { return vecs_.at(rslot(i)); }
  Wedge wedge(std::size_t i) const { return {left(i), right(i)}; }
  std::vector<Wedge> wedges() const;
  const Direction& ref_dir() const { return ref_; }

  LabeledQuadrangulation with_ref_dir(const Direction& d) const;

  /// Same combinatorics and vectors, reference directions at the same angle.
  friend bool operator==(const LabeledQuadrangulation& a, const LabeledQuadrangulation& b) {
    return a.comb_ == b.comb_ && a.vecs_ == b.vecs_ && a.ref_.same_as(b.ref_);
  }

 private:
  LabeledQuadrangulation(CombDatum comb, std::vector<Vec2> vecs, Direction ref, bool);
  void validate() const;

  CombDatum comb_;
  std::vector<Vec2> vecs_;
  Direction ref_;
};

/// w_{i,l} + w_{pi_l(i),r}; throws TrainTrackViolation if it differs from
/// w_{i,r} + w_{pi_r(i),l}.
Vec2 diagonal(const LabeledQuadrangulation& q, std::size_t i);

enum class Slant { Left, Right, Parallel };
std::string to_string(Slant s);

/// Side of ref_dir on which the diagonal of quadrilateral i lies.
Slant slant(const LabeledQuadrangulation& q, std::size_t i);

/// A cycle of pi_r moves left vectors, a cycle of pi_l moves right vectors.
enum class CycleSide { PiR, PiL };
std::string to_string(CycleSide s);

struct StaircaseMove {
  CycleSide side;
  std::vector<std::size_t> cycle;
  IntMatrix matrix;

  std::string str() const;
};

/// I + sum E[(i,l),(pi_l(i),r)] over a cycle of pi_r, or
/// I + sum E[(i,r),(pi_r(i),l)] over a cycle of pi_l.
/// Throws std::invalid_argument if `cycle` is not a cycle of that permutation.
IntMatrix elementary_matrix(const CombDatum& comb, const std::vector<std::size_t>& cycle, CycleSide side);

StaircaseMove make_move(const CombDatum& comb, std::vector<std::size_t> cycle, CycleSide side);

/// Whether every quadrilateral of the cycle is slanted as the move requires.
bool well_slanted(const LabeledQuadrangulation& q, const std::vector<std::size_t>& cycle, CycleSide side);

/// Well-slanted cycles of pi_r, then of pi_l, each by least label.
std::vector<StaircaseMove> available_moves(const LabeledQuadrangulation& q);

/// Combinatorial datum after the move.
CombDatum moved_comb(const CombDatum& comb, const std::vector<std::size_t>& cycle, CycleSide side);

/// Throws MoveUnavailable if the move is not well-slanted for q.
LabeledQuadrangulation staircase_move(const LabeledQuadrangulation& q, const StaircaseMove& move);

QuadNum quadrilateral_area(const LabeledQuadrangulation& q, std::size_t i);
QuadNum total_area(const LabeledQuadrangulation& q);

/// Integer matrix acting on a 2k-tuple of vectors.
std::vector<Vec2> apply_matrix(const IntMatrix& m, std::span<const Vec2> vecs);

/// Label sigma(i) takes over what label i carried.
LabeledQuadrangulation relabel(const LabeledQuadrangulation& q, const Permutation& sigma);
IntMatrix relabel_matrix(const Permutation& sigma);

/// Reflection (x, y) -> (-x, y), which swaps the roles of l and r; the new
/// (sigma(i), l) is the mirror of the old (i, r).
LabeledQuadrangulation mirror(const LabeledQuadrangulation& q, const Permutation& sigma);
IntMatrix mirror_matrix(const Permutation& sigma);

/// Image under an invertible linear map. A map with det < 0 reverses
/// orientation, so the two sides of every wedge (and pi_l, pi_r) swap.
LabeledQuadrangulation transform(const LabeledQuadrangulation& q, const Mat2& m);

/// Some sigma with sigma pi sigma^{-1} = target for both permutations.
std::optional<Permutation> relabeling_to(const CombDatum& from, const CombDatum& to);

/// Whether the closed cone of `inner` lies in that of `outer`.
bool cone_contains(const Wedge& outer, const Wedge& inner);
/// Whether d is strictly between the two sides.
bool strictly_inside(const Wedge& w, const Direction& d);

enum class HaltReason { StepLimit, Singularity, Blocked };
std::string to_string(HaltReason h);

struct DiagStep {
  StaircaseMove move;
  LabeledQuadrangulation after;
};

struct DiagRun {
  LabeledQuadrangulation initial;
  std::vector<DiagStep> steps;
  HaltReason halt = HaltReason::StepLimit;
};

/// Repeatedly executes the first available move. Stops at a Parallel
/// diagonal (the direction hits a singularity), when nothing is available,
/// or after max_steps moves.
DiagRun run_diagonal_changes(const LabeledQuadrangulation& q, std::size_t max_steps);

}  // namespace octocf::diagch
