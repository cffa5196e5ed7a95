#include "octocf/h2moves.hpp"

#include <algorithm>
#include <set>

namespace octocf::h2moves {

namespace {

using diagch::CycleSide;
using M = std::vector<std::vector<IntMatrix::Entry>>;

IntMatrix rows(const M& r) { return IntMatrix::from_rows(r); }

void check_sector(int i) {
  if (i < 1 || i > 7) throw std::out_of_range("sector index must be in 1..7, got " + std::to_string(i));
}

}  // namespace

std::string to_string(NodeId n) { return n == NodeId::Left ? "left" : "right"; }

const CombDatum& node_comb(NodeId n) {
  static const CombDatum left{Permutation::parse("(1,2)(3)", 3), Permutation::parse("(1)(2,3)", 3)};
  static const CombDatum right{Permutation::parse("(1,2,3)", 3), Permutation::parse("(1)(2,3)", 3)};
  return n == NodeId::Left ? left : right;
}

std::optional<NodeId> node_of(const CombDatum& c) {
  if (c == node_comb(NodeId::Left)) return NodeId::Left;
  if (c == node_comb(NodeId::Right)) return NodeId::Right;
  return std::nullopt;
}

std::string to_string(ReducedMove m) {
  switch (m) {
    case ReducedMove::RR_LtoR: return "RR_LtoR";
    case ReducedMove::RR_RtoL: return "RR_RtoL";
    case ReducedMove::RDOT: return "RDOT";
    case ReducedMove::LLL_RELABEL: return "LLL_RELABEL";
    case ReducedMove::SYM_RELABEL: return "SYM_RELABEL";
  }
  return "?";
}

ReducedMove parse_reduced_move(std::string_view s) {
  for (ReducedMove m : {ReducedMove::RR_LtoR, ReducedMove::RR_RtoL, ReducedMove::RDOT, ReducedMove::LLL_RELABEL,
                        ReducedMove::SYM_RELABEL}) {
    if (to_string(m) == s) return m;
  }
  throw ParseError("unknown reduced move: " + std::string(s));
}

const IntMatrix& move_matrix(ReducedMove m) {
  static const IntMatrix rr_lr = rows({{1, 0, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 0, 0},
                                       {0, 1, 1, 0, 0, 0},
                                       {0, 0, 0, 1, 0, 0},
                                       {0, 0, 0, 0, 1, 1},
                                       {0, 0, 0, 0, 0, 1}});
  static const IntMatrix rr_rl = rows({{1, 0, 0, 0, 0, 0},
                                       {0, 1, 0, 0, 0, 0},
                                       {0, 0, 1, 0, 0, 1},
                                       {0, 0, 0, 1, 0, 0},
                                       {0, 1, 0, 0, 1, 0},
                                       {0, 0, 0, 0, 0, 1}});
  static const IntMatrix rdot = rows({{1, 0, 0, 1, 0, 0},
                                      {0, 1, 0, 0, 0, 0},
                                      {0, 0, 1, 0, 0, 0},
                                      {0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 1, 0},
                                      {0, 0, 0, 0, 0, 1}});
  static const IntMatrix lll = rows({{0, 0, 1, 0, 0, 0},
                                     {0, 0, 0, 1, 1, 0},
                                     {0, 0, 0, 0, 1, 0},
                                     {0, 0, 1, 0, 0, 1},
                                     {1, 0, 0, 0, 0, 0},
                                     {1, 1, 0, 0, 0, 0}});
  static const IntMatrix sym = rows({{0, 0, 0, 0, 0, 1},
                                     {0, 0, 0, 0, 1, 0},
                                     {0, 0, 0, 1, 0, 0},
                                     {0, 0, 1, 0, 0, 0},
                                     {0, 1, 0, 0, 0, 0},
                                     {1, 0, 0, 0, 0, 0}});
  switch (m) {
    case ReducedMove::RR_LtoR: return rr_lr;
    case ReducedMove::RR_RtoL: return rr_rl;
    case ReducedMove::RDOT: return rdot;
    case ReducedMove::LLL_RELABEL: return lll;
    case ReducedMove::SYM_RELABEL: return sym;
  }
  throw std::logic_error("unreachable");
}

std::optional<NodeId> transition(NodeId from, ReducedMove m) {
  switch (m) {
    case ReducedMove::RR_LtoR:
      if (from == NodeId::Left) return NodeId::Right;
      return std::nullopt;
    case ReducedMove::RR_RtoL:
      if (from == NodeId::Right) return NodeId::Left;
      return std::nullopt;
    case ReducedMove::RDOT: return from;
    case ReducedMove::LLL_RELABEL:
      if (from == NodeId::Right) return NodeId::Right;
      return std::nullopt;
    case ReducedMove::SYM_RELABEL:
      if (from == NodeId::Left) return NodeId::Left;
      return std::nullopt;
  }
  return std::nullopt;
}

ReducedState apply_reduced(const ReducedState& s, ReducedMove m) {
  const auto next = transition(s.node, m);
  if (!next) throw InvalidWord(to_string(m) + " does not leave the " + to_string(s.node) + " node");
  if (s.vecs.size() != 6) throw std::invalid_argument("reduced state needs six vectors");
  ReducedState out{*next, diagch::apply_matrix(move_matrix(m), s.vecs), s.parity};
  if (m == ReducedMove::SYM_RELABEL) {
    for (Vec2& v : out.vecs) v = reflect(v);
    out.parity ^= 1;
  }
  return out;
}

Composition compose_word(const MoveWord& w) {
  Composition c{IntMatrix::identity(6), 0, w.start};
  for (std::size_t j = 0; j < w.moves.size(); ++j) {
    const auto next = transition(c.end, w.moves[j]);
    if (!next) {
      throw InvalidWord("move " + std::to_string(j + 1) + " (" + to_string(w.moves[j]) + ") does not leave the " +
                        to_string(c.end) + " node");
    }
    c.matrix = move_matrix(w.moves[j]) * c.matrix;
    if (w.moves[j] == ReducedMove::SYM_RELABEL) c.parity ^= 1;
    c.end = *next;
  }
  return c;
}

std::vector<std::size_t> RawMove::marked() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (marks[i]) out.push_back(i);
  }
  return out;
}

std::string RawMove::str() const {
  if (symmetry) return "sym";
  std::string s;
  for (bool b : marks) s += b ? std::string(1, kind) : std::string("·");
  return s;
}

RawMove parse_raw_move(std::string_view s) {
  if (s == "sym" || s == "symmetry") return RawMove{true, 'r', {}};
  RawMove m;
  std::size_t slot = 0;
  bool have_kind = false;
  for (std::size_t i = 0; i < s.size();) {
    if (slot == 3) throw ParseError("raw move longer than three marks: " + std::string(s));
    if (s.compare(i, 2, "·") == 0) {
      i += 2;
      ++slot;
      continue;
    }
    const char c = s[i++];
    if (c == '.') {
      ++slot;
      continue;
    }
    if (c != 'l' && c != 'r') throw ParseError("bad raw move: " + std::string(s));
    if (have_kind && c != m.kind) throw ParseError("raw move mixes l and r: " + std::string(s));
    m.kind = c;
    have_kind = true;
    m.marks[slot++] = true;
  }
  if (slot != 3 || !have_kind) throw ParseError("bad raw move: " + std::string(s));
  return m;
}

const std::vector<RawMove>& sector_raw_word(int i) {
  check_sector(i);
  static const auto words = [] {
    const std::vector<std::vector<std::string>> text = {
        {"·rr", "r··", "·rr"},
        {"·rr", "lll", "r·r", "·r·", "symmetry"},
        {"·rr", "lll", "lll", "·rr"},
        {"··l", "·rr", "·rr", "ll·", "ll·", "r··", "symmetry"},
        {"··l", "·rr", "lll", "r·r", "l··"},
        {"ll·", "··l", "rrr", "l·l"},
        {"ll·", "··l", "ll·", "··l"},
    };
    std::vector<std::vector<RawMove>> out;
    for (const auto& w : text) {
      std::vector<RawMove> moves;
      for (const auto& s : w) moves.push_back(parse_raw_move(s));
      out.push_back(std::move(moves));
    }
    return out;
  }();
  return words[static_cast<std::size_t>(i - 1)];
}

std::optional<MoveWord> sector_word(int i) {
  check_sector(i);
  using R = ReducedMove;
  constexpr R S = R::SYM_RELABEL, D = R::RDOT, LR = R::RR_LtoR, RL = R::RR_RtoL, L3 = R::LLL_RELABEL;
  switch (i) {
    case 1: return MoveWord{NodeId::Left, {LR, D, RL}};
    case 4: return MoveWord{NodeId::Left, {S, D, S, LR, RL, S, LR, RL, S, D, S}};
    case 5: return MoveWord{NodeId::Left, {S, D, S, LR, L3, RL, S, D, S}};
    case 6: return MoveWord{NodeId::Left, {S, LR, D, L3, RL}};
    case 7: return MoveWord{NodeId::Left, {S, LR, D, RL, D, S}};
    default: return std::nullopt;
  }
}

const IntMatrix& sector_matrix(int i) {
  check_sector(i);
  static const std::array<IntMatrix, 7> a = {
      rows({{1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 1},
            {0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}}),
      rows({{1, 1, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 1}, {0, 1, 1, 0, 0, 1},
            {1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1}, {0, 2, 2, 0, 0, 1}}),
      rows({{0, 0, 0, 0, 1, 1}, {1, 1, 1, 0, 0, 1}, {1, 1, 1, 1, 1, 1},
            {1, 1, 0, 0, 1, 1}, {1, 2, 2, 0, 0, 1}, {0, 1, 1, 1, 1, 1}}),
      rows({{0, 0, 1, 0, 0, 1}, {0, 1, 1, 0, 1, 1}, {1, 1, 1, 1, 1, 1},
            {0, 1, 2, 0, 0, 1}, {1, 2, 1, 0, 1, 1}, {2, 1, 1, 1, 1, 1}}),
      rows({{0, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 1}, {1, 1, 1, 0, 1, 1},
            {0, 1, 2, 0, 0, 1}, {1, 0, 1, 1, 1, 1}, {2, 2, 1, 0, 1, 1}}),
      rows({{0, 0, 0, 1, 1, 0}, {1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 1, 1},
            {1, 0, 0, 1, 1, 0}, {1, 1, 2, 0, 0, 1}, {0, 0, 1, 0, 1, 1}}),
      rows({{1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0},
            {1, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 2, 0, 0, 1}}),
  };
  return a[static_cast<std::size_t>(i - 1)];
}

const Permutation& symmetry_relabeling() {
  static const Permutation s = Permutation::parse("(1,3)", 3);
  return s;
}

RawState start_state(const LabeledQuadrangulation& q) { return {q, IntMatrix::identity(2 * q.k()), 0}; }

RawState apply_symmetry(const RawState& s, std::vector<RawEvent>* log) {
  const IntMatrix p = diagch::mirror_matrix(symmetry_relabeling());
  RawState out{diagch::mirror(s.q, symmetry_relabeling()), p * s.labels, s.parity ^ 1};
  if (log) log->push_back({RawEvent::Kind::Symmetry, "sym", std::nullopt, p, out.q});
  return out;
}

RawState relabel_state(const RawState& s, const Permutation& sigma, std::vector<RawEvent>* log) {
  const IntMatrix p = diagch::relabel_matrix(sigma);
  RawState out{diagch::relabel(s.q, sigma), p * s.labels, s.parity};
  if (log) log->push_back({RawEvent::Kind::Relabel, "relabel " + sigma.str(), std::nullopt, p, out.q});
  return out;
}

namespace {

// Whole cycles of `perm` covering exactly `marked`, or nullopt.
std::optional<std::vector<std::vector<std::size_t>>> split(const Permutation& perm,
                                                          const std::vector<std::size_t>& marked) {
  const std::set<std::size_t> want(marked.begin(), marked.end());
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : perm.cycles()) {
    const auto hits = std::count_if(c.begin(), c.end(), [&](std::size_t i) { return want.count(i) > 0; });
    if (hits == 0) continue;
    if (static_cast<std::size_t>(hits) != c.size()) return std::nullopt;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

RawState execute_raw_move(const RawState& s, const RawMove& m, std::vector<RawEvent>* log) {
  if (m.symmetry) return apply_symmetry(s, log);
  if (s.q.k() != 3) throw InvalidWord("raw moves act on three quadrilaterals");
  const CycleSide side = m.kind == 'r' ? CycleSide::PiR : CycleSide::PiL;
  const auto owner = [&](const RawState& st) -> const Permutation& {
    return side == CycleSide::PiR ? st.q.comb().pi_r : st.q.comb().pi_l;
  };
  RawState cur = s;
  auto parts = split(owner(cur), m.marked());
  if (!parts) {
    for (NodeId n : {NodeId::Left, NodeId::Right}) {
      if (auto sigma = diagch::relabeling_to(cur.q.comb(), node_comb(n))) {
        cur = relabel_state(cur, *sigma, log);
        parts = split(owner(cur), m.marked());
        break;
      }
    }
  }
  if (!parts) {
    throw InvalidWord("marks of " + m.str() + " are not a union of cycles of " + to_string(side) + " in " +
                      cur.q.comb().str());
  }
  for (auto& c : *parts) {
    diagch::StaircaseMove mv = diagch::make_move(cur.q.comb(), std::move(c), side);
    LabeledQuadrangulation next = diagch::staircase_move(cur.q, mv);
    cur.labels = mv.matrix * cur.labels;
    cur.q = std::move(next);
    if (log) log->push_back({RawEvent::Kind::Staircase, m.str() + " " + mv.str(), mv, mv.matrix, cur.q});
  }
  return cur;
}

}  // namespace octocf::h2moves
