#pragma once

// The regular octagon surface (side 1): its beginning quadrangulations and
// the check that each branch of the octagon Farey map is realized by a
// fixed word of staircase moves.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octocf/diagch.hpp"
#include "octocf/farey.hpp"
#include "octocf/h2moves.hpp"

namespace octocf::octagon {

using diagch::LabeledQuadrangulation;
using diagch::Wedge;
using farey::Direction;

/// 2(1 + √2).
QuadNum octagon_area();

/// Q' vectors ordered (1,l),(1,r),...,(3,r), for the Left node.
const std::vector<Vec2>& qprime_vectors();
/// Q' with the given reference direction (vertical by default).
LabeledQuadrangulation qprime(const Direction& ref = Direction(Vec2{0, 1}));
/// The quadrangulation adapted to sector 0; Q' is its image under gamma.
LabeledQuadrangulation q0();
/// nu_{s0}^{-1} Q0, with reference direction nu_{s0}^{-1} (4, 1).
LabeledQuadrangulation initial_quadrangulation(farey::SectorIndex s0);

/// Execution of one sector word from Q' along theta.
struct SectorRun {
  int sector = 0;
  Direction theta{Vec2{0, 1}};
  std::vector<h2moves::RawEvent> events;
  /// State after each entry of the raw word.
  std::vector<LabeledQuadrangulation> snapshots;
  h2moves::RawState final_state;
  bool implicit_symmetry = false;
  /// Relabeling onto the Left node after the word, if one exists.
  std::optional<Permutation> closing;
  /// Final vectors and direction mapped by gamma nu_i rho^parity.
  std::vector<Vec2> renormalized;
  Direction renormalized_direction;
};

/// Runs sector_raw_word(i) from Q' with reference theta. For an
/// orientation-reversing branch a symmetry is appended when the word has
/// not reflected. Throws diagch::MoveUnavailable or h2moves::InvalidWord.
SectorRun run_sector_word(int i, const Direction& theta);

struct SectorReport {
  int sector = 0;
  Direction theta{Vec2{0, 1}};
  bool moves_ok = false;
  std::string move_error;
  IntMatrix matrix;
  bool matrix_ok = false;
  std::optional<MatrixMismatch> mismatch;
  int parity = 0;
  bool parity_ok = false;
  bool closure_ok = false;
  std::string closure_detail;
  bool direction_ok = false;

  bool ok() const { return moves_ok && matrix_ok && parity_ok && closure_ok && direction_ok; }
};

/// Throws std::invalid_argument unless theta is interior to sector i.
SectorReport verify_sector(int i, const Direction& theta, const IntMatrix* expected = nullptr);

/// u-midpoint and quartiles for sectors 1..6 (count points evenly spaced in
/// u); for sector 7, -(1+√2) - 2^{j-2}.
std::vector<Direction> default_samples(int i, std::size_t count = 3);

struct WordIdentity {
  int sector = 0;
  IntMatrix matrix;
  int parity = 0;
  h2moves::NodeId end = h2moves::NodeId::Left;
  bool ok = false;
  std::optional<MatrixMismatch> mismatch;
};

struct TheoremOptions {
  std::vector<int> sectors{1, 2, 3, 4, 5, 6, 7};
  std::size_t samples = 3;
  /// Replaces A_1..A_7 as the expected matrices.
  std::optional<std::array<IntMatrix, 7>> expected;
};

struct TheoremReport {
  std::vector<SectorReport> samples;
  std::vector<WordIdentity> identities;
  bool ok() const;
};

/// Samples evaluated in parallel.
TheoremReport verify_theorem(const TheoremOptions& opt = {});
/// Reference implementation, one sample after another.
TheoremReport verify_theorem_serial(const TheoremOptions& opt = {});

struct ExpansionStep {
  int sector = 0;
  /// Renormalized direction the word ran along.
  Direction direction{Vec2{0, 1}};
  SectorRun run;
  /// Accumulated renormalization T_k.
  Mat2 frame;
  /// T_k^{-1} Q' with reference theta: the wedges in the original frame.
  std::optional<LabeledQuadrangulation> original;
  /// A_{s_k} applied to the previous original-frame vectors equals them.
  bool conjugation_ok = false;
  /// Every staircase move of the word shrank the wedges it changed.
  bool nested_ok = false;
  /// Every intermediate state has area 2(1+√2).
  bool area_ok = false;
};

struct ExpansionTrace {
  Direction theta{Vec2{0, 1}};
  farey::FareyExpansion expansion;
  Mat2 frame0;
  std::optional<LabeledQuadrangulation> start;
  std::optional<LabeledQuadrangulation> original_start;
  std::vector<ExpansionStep> steps;
  /// Set when the renormalized direction reached a sector boundary, where
  /// some saddle connection is parallel to it.
  bool hit_singularity = false;
  std::string halt_detail;
  /// Non-empty when a check failed.
  std::string error;

  bool ok() const;
};

/// Renormalized diagonal changes along theta for n sector words.
ExpansionTrace run_expansion(const Direction& theta, std::size_t n,
                             farey::TiePolicy policy = farey::TiePolicy::Low);

std::vector<ExpansionTrace> run_expansions(const std::vector<Direction>& thetas, std::size_t n);
std::vector<ExpansionTrace> run_expansions_serial(const std::vector<Direction>& thetas, std::size_t n);

}  // namespace octocf::octagon
