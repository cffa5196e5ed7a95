#pragma once

// The reduced move system for H(2) quadrangulations with three
// quadrilaterals: two combinatorial nodes, five moves, word composition,
// and the per-sector words and matrices of the octagon Farey map.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "octocf/diagch.hpp"
#include "octocf/intmatrix.hpp"

namespace octocf::h2moves {

using diagch::CombDatum;
using diagch::LabeledQuadrangulation;

class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Left: pi_l = (1,2)(3), pi_r = (1)(2,3). Right: pi_l = (1,2,3), same pi_r.
enum class NodeId { Left, Right };
std::string to_string(NodeId n);
const CombDatum& node_comb(NodeId n);
std::optional<NodeId> node_of(const CombDatum& c);

enum class ReducedMove { RR_LtoR, RR_RtoL, RDOT, LLL_RELABEL, SYM_RELABEL };
std::string to_string(ReducedMove m);
/// Accepts the enum names.
ReducedMove parse_reduced_move(std::string_view s);

const IntMatrix& move_matrix(ReducedMove m);
/// Target node, or nullopt when the move does not leave `from`.
std::optional<NodeId> transition(NodeId from, ReducedMove m);

struct ReducedState {
  NodeId node = NodeId::Left;
  std::vector<Vec2> vecs;
  int parity = 0;
};

/// Throws InvalidWord on a move that does not leave s.node.
ReducedState apply_reduced(const ReducedState& s, ReducedMove m);

struct MoveWord {
  NodeId start = NodeId::Left;
  std::vector<ReducedMove> moves;
};

struct Composition {
  IntMatrix matrix;
  int parity = 0;
  NodeId end = NodeId::Left;
};

/// Product of the move matrices, later moves on the left.
Composition compose_word(const MoveWord& w);

/// A step such as "·rr" or "lll": the marked quadrilaterals undergo a
/// diagonal change, moving left ('r' marks) or right ('l' marks) vectors.
/// Or the left/right symmetry.
struct RawMove {
  bool symmetry = false;
  char kind = 'r';
  std::array<bool, 3> marks{};

  std::vector<std::size_t> marked() const;
  std::string str() const;
  friend bool operator==(const RawMove&, const RawMove&) = default;
};

/// "·rr", ".rr", "r··", "sym", "symmetry".
RawMove parse_raw_move(std::string_view s);

/// i in 1..7.
const std::vector<RawMove>& sector_raw_word(int i);
/// Reduced-graph word; present for sectors 1, 4, 5, 6, 7.
std::optional<MoveWord> sector_word(int i);
/// The matrix A_i of sector i.
const IntMatrix& sector_matrix(int i);

/// Label permutation used by the symmetry, 1 <-> 3.
const Permutation& symmetry_relabeling();

/// A quadrangulation tracked with the accumulated label matrix and the
/// number of reflections mod 2.
struct RawState {
  LabeledQuadrangulation q;
  IntMatrix labels;
  int parity = 0;
};

struct RawEvent {
  enum class Kind { Staircase, Relabel, Symmetry };
  Kind kind;
  std::string label;
  std::optional<diagch::StaircaseMove> move;
  IntMatrix matrix;
  LabeledQuadrangulation after;
};

RawState start_state(const LabeledQuadrangulation& q);

/// Executes one raw step. The marked labels are split into whole cycles of
/// pi_r ('r') or pi_l ('l'); if they do not split, the state is first
/// relabeled onto the Left or Right node. Throws InvalidWord when no split
/// exists and diagch::MoveUnavailable when a cycle is not well-slanted.
RawState execute_raw_move(const RawState& s, const RawMove& m, std::vector<RawEvent>* log = nullptr);

RawState apply_symmetry(const RawState& s, std::vector<RawEvent>* log = nullptr);
RawState relabel_state(const RawState& s, const Permutation& sigma, std::vector<RawEvent>* log = nullptr);

}  // namespace octocf::h2moves
