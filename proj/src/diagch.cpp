#include "octocf/diagch.hpp"

#include <algorithm>

namespace octocf::diagch {

namespace {

std::vector<Vec2> flatten(const std::vector<Wedge>& wedges) {
  std::vector<Vec2> out;
  out.reserve(2 * wedges.size());
  for (const Wedge& w : wedges) {
    out.push_back(w.left);
    out.push_back(w.right);
  }
  return out;
}

int orient(const Vec2& a, const Vec2& b, const Vec2& c) { return qsign(cross(b - a, c - a)); }

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return qsign(std::min(a.x, b.x) - p.x) <= 0 && qsign(p.x - std::max(a.x, b.x)) <= 0 &&
         qsign(std::min(a.y, b.y) - p.y) <= 0 && qsign(p.y - std::max(a.y, b.y)) <= 0;
}

bool segments_meet(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  const int d1 = orient(q1, q2, p1);
  const int d2 = orient(q1, q2, p2);
  const int d3 = orient(p1, p2, q1);
  const int d4 = orient(p1, p2, q2);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

std::string label_list(const std::vector<std::size_t>& c) {
  std::string s = "(";
  for (std::size_t j = 0; j < c.size(); ++j) s += (j ? "," : "") + std::to_string(c[j] + 1);
  return s + ")";
}

}  // namespace

LabeledQuadrangulation::LabeledQuadrangulation(CombDatum comb, std::vector<Wedge> wedges, Direction ref_dir)
    : LabeledQuadrangulation(std::move(comb), flatten(wedges), std::move(ref_dir), true) {}

LabeledQuadrangulation::LabeledQuadrangulation(CombDatum comb, std::vector<Vec2> vecs, Direction ref, bool)
    : comb_(std::move(comb)), vecs_(std::move(vecs)), ref_(std::move(ref)) {
  validate();
}

LabeledQuadrangulation LabeledQuadrangulation::from_vectors(CombDatum comb, std::vector<Vec2> vecs,
                                                            Direction ref_dir) {
  return LabeledQuadrangulation(std::move(comb), std::move(vecs), std::move(ref_dir), true);
}

std::vector<Wedge> LabeledQuadrangulation::wedges() const {
  std::vector<Wedge> out;
  for (std::size_t i = 0; i < k(); ++i) out.push_back(wedge(i));
  return out;
}

LabeledQuadrangulation LabeledQuadrangulation::with_ref_dir(const Direction& d) const {
  return LabeledQuadrangulation(comb_, vecs_, d, true);
}

void LabeledQuadrangulation::validate() const {
  const std::size_t n = comb_.k();
  if (n == 0) throw InvalidQuadrangulation("quadrangulation needs at least one quadrilateral");
  if (comb_.pi_r.size() != n) throw InvalidQuadrangulation("pi_l and pi_r act on different label sets");
  if (vecs_.size() != 2 * n) throw InvalidQuadrangulation("expected one wedge per label");
  const Vec2& d = ref_.vec();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 wd = diagonal(*this, i);
    const Vec2& wl = left(i);
    const Vec2& wr = right(i);
    const std::string tag = "quadrilateral " + std::to_string(i + 1) + ": ";
    if (!(qsign(cross(d, wl)) > 0 && qsign(cross(d, wr)) < 0 && qsign(cross(wr, wl)) > 0)) {
      throw InvalidQuadrangulation(tag + "wedge does not straddle " + ref_.str());
    }
    if (qsign(quadrilateral_area(*this, i)) <= 0) throw InvalidQuadrangulation(tag + "non-positive area");
    const Vec2 o{0, 0};
    if (segments_meet(o, wr, wd, wl) || segments_meet(wr, wd, wl, o)) {
      throw InvalidQuadrangulation(tag + "not a simple quadrilateral");
    }
  }
}

Vec2 diagonal(const LabeledQuadrangulation& q, std::size_t i) {
  const CombDatum& c = q.comb();
  Vec2 a = q.left(i) + q.right(c.pi_l(i));
  Vec2 b = q.right(i) + q.left(c.pi_r(i));
  if (!(a == b)) {
    throw TrainTrackViolation("train-track relation fails at label " + std::to_string(i + 1) + ": " + a.str() +
                              " vs " + b.str());
  }
  return a;
}

std::string to_string(Slant s) {
  switch (s) {
    case Slant::Left: return "left";
    case Slant::Right: return "right";
    case Slant::Parallel: return "parallel";
  }
  return "?";
}

Slant slant(const LabeledQuadrangulation& q, std::size_t i) {
  const int s = qsign(cross(q.ref_dir().vec(), diagonal(q, i)));
  return s > 0 ? Slant::Left : s < 0 ? Slant::Right : Slant::Parallel;
}

std::string to_string(CycleSide s) { return s == CycleSide::PiR ? "pi_r" : "pi_l"; }

std::string StaircaseMove::str() const { return to_string(side) + " cycle " + label_list(cycle); }

IntMatrix elementary_matrix(const CombDatum& comb, const std::vector<std::size_t>& cycle, CycleSide side) {
  const Permutation& owner = side == CycleSide::PiR ? comb.pi_r : comb.pi_l;
  if (!owner.has_cycle(cycle)) {
    throw std::invalid_argument(label_list(cycle) + " is not a cycle of " + to_string(side) + " = " + owner.str());
  }
  IntMatrix m = IntMatrix::identity(2 * comb.k());
  for (std::size_t i : cycle) {
    if (side == CycleSide::PiR) {
      m.at(lslot(i), rslot(comb.pi_l(i))) += 1;
    } else {
      m.at(rslot(i), lslot(comb.pi_r(i))) += 1;
    }
  }
  return m;
}

StaircaseMove make_move(const CombDatum& comb, std::vector<std::size_t> cycle, CycleSide side) {
  IntMatrix m = elementary_matrix(comb, cycle, side);
  return {side, std::move(cycle), std::move(m)};
}

bool well_slanted(const LabeledQuadrangulation& q, const std::vector<std::size_t>& cycle, CycleSide side) {
  const Slant need = side == CycleSide::PiR ? Slant::Left : Slant::Right;
  return std::all_of(cycle.begin(), cycle.end(), [&](std::size_t i) { return slant(q, i) == need; });
}

std::vector<StaircaseMove> available_moves(const LabeledQuadrangulation& q) {
  std::vector<StaircaseMove> out;
  for (CycleSide side : {CycleSide::PiR, CycleSide::PiL}) {
    const Permutation& owner = side == CycleSide::PiR ? q.comb().pi_r : q.comb().pi_l;
    for (auto& c : owner.cycles()) {
      if (well_slanted(q, c, side)) out.push_back(make_move(q.comb(), std::move(c), side));
    }
  }
  return out;
}

CombDatum moved_comb(const CombDatum& comb, const std::vector<std::size_t>& cycle, CycleSide side) {
  std::vector<std::size_t> l = comb.pi_l.images();
  std::vector<std::size_t> r = comb.pi_r.images();
  for (std::size_t i : cycle) {
    if (side == CycleSide::PiR) {
      l[i] = comb.pi_l(comb.pi_r(i));
    } else {
      r[i] = comb.pi_r(comb.pi_l(i));
    }
  }
  return {Permutation(std::move(l)), Permutation(std::move(r))};
}

LabeledQuadrangulation staircase_move(const LabeledQuadrangulation& q, const StaircaseMove& move) {
  const IntMatrix m = elementary_matrix(q.comb(), move.cycle, move.side);
  if (!(m == move.matrix)) throw std::invalid_argument("staircase move carries a stale matrix");
  if (!well_slanted(q, move.cycle, move.side)) {
    throw MoveUnavailable("move " + move.str() + " is not well-slanted for " + q.ref_dir().str());
  }
  return LabeledQuadrangulation::from_vectors(moved_comb(q.comb(), move.cycle, move.side),
                                              apply_matrix(m, q.vectors()), q.ref_dir());
}

QuadNum quadrilateral_area(const LabeledQuadrangulation& q, std::size_t i) {
  const Vec2 wd = diagonal(q, i);
  return QuadNum(Rational(1, 2)) * (cross(wd, q.left(i)) + cross(q.right(i), wd));
}

QuadNum total_area(const LabeledQuadrangulation& q) {
  QuadNum s;
  for (std::size_t i = 0; i < q.k(); ++i) s += quadrilateral_area(q, i);
  return s;
}

std::vector<Vec2> apply_matrix(const IntMatrix& m, std::span<const Vec2> vecs) {
  if (m.size() != vecs.size()) throw std::invalid_argument("apply: size mismatch");
  std::vector<Vec2> out(vecs.size(), Vec2{0, 0});
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      const auto e = m(r, c);
      if (e == 1) {
        out[r] += vecs[c];
      } else if (e != 0) {
        out[r] += QuadNum(static_cast<long>(e)) * vecs[c];
      }
    }
  }
  return out;
}

IntMatrix relabel_matrix(const Permutation& sigma) {
  IntMatrix m(2 * sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    m.at(lslot(sigma(i)), lslot(i)) = 1;
    m.at(rslot(sigma(i)), rslot(i)) = 1;
  }
  return m;
}

LabeledQuadrangulation relabel(const LabeledQuadrangulation& q, const Permutation& sigma) {
  if (sigma.size() != q.k()) throw std::invalid_argument("relabel: wrong permutation size");
  CombDatum c{q.comb().pi_l.conjugated_by(sigma), q.comb().pi_r.conjugated_by(sigma)};
  return LabeledQuadrangulation::from_vectors(std::move(c), apply_matrix(relabel_matrix(sigma), q.vectors()),
                                              q.ref_dir());
}

IntMatrix mirror_matrix(const Permutation& sigma) {
  IntMatrix m(2 * sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    m.at(lslot(sigma(i)), rslot(i)) = 1;
    m.at(rslot(sigma(i)), lslot(i)) = 1;
  }
  return m;
}

LabeledQuadrangulation mirror(const LabeledQuadrangulation& q, const Permutation& sigma) {
  if (sigma.size() != q.k()) throw std::invalid_argument("mirror: wrong permutation size");
  CombDatum c{q.comb().pi_r.conjugated_by(sigma), q.comb().pi_l.conjugated_by(sigma)};
  std::vector<Vec2> v = apply_matrix(mirror_matrix(sigma), q.vectors());
  for (Vec2& w : v) w = reflect(w);
  return LabeledQuadrangulation::from_vectors(std::move(c), std::move(v), Direction(reflect(q.ref_dir().vec())));
}

LabeledQuadrangulation transform(const LabeledQuadrangulation& q, const Mat2& m) {
  const int det = qsign(m.det());
  if (det == 0) throw std::invalid_argument("transform needs an invertible map");
  std::vector<Vec2> v;
  v.reserve(q.vectors().size());
  for (const Vec2& w : q.vectors()) v.push_back(m * w);
  CombDatum c = q.comb();
  if (det < 0) {
    for (std::size_t i = 0; i < q.k(); ++i) std::swap(v[lslot(i)], v[rslot(i)]);
    std::swap(c.pi_l, c.pi_r);
  }
  return LabeledQuadrangulation::from_vectors(std::move(c), std::move(v), Direction(m * q.ref_dir().vec()));
}

std::optional<Permutation> relabeling_to(const CombDatum& from, const CombDatum& to) {
  if (from.k() != to.k()) return std::nullopt;
  for (const Permutation& s : all_permutations(from.k())) {
    if (from.pi_l.conjugated_by(s) == to.pi_l && from.pi_r.conjugated_by(s) == to.pi_r) return s;
  }
  return std::nullopt;
}

bool cone_contains(const Wedge& outer, const Wedge& inner) {
  auto in = [&](const Vec2& v) {
    return qsign(cross(outer.right, v)) >= 0 && qsign(cross(v, outer.left)) >= 0;
  };
  return in(inner.left) && in(inner.right);
}

bool strictly_inside(const Wedge& w, const Direction& d) {
  return qsign(cross(w.right, d.vec())) > 0 && qsign(cross(d.vec(), w.left)) > 0;
}

std::string to_string(HaltReason h) {
  switch (h) {
    case HaltReason::StepLimit: return "step_limit";
    case HaltReason::Singularity: return "singularity";
    case HaltReason::Blocked: return "blocked";
  }
  return "?";
}

DiagRun run_diagonal_changes(const LabeledQuadrangulation& q, std::size_t max_steps) {
  DiagRun run{q, {}, HaltReason::StepLimit};
  const LabeledQuadrangulation* cur = &run.initial;
  while (run.steps.size() < max_steps) {
    for (std::size_t i = 0; i < cur->k(); ++i) {
      if (slant(*cur, i) == Slant::Parallel) {
        run.halt = HaltReason::Singularity;
        return run;
      }
    }
    auto moves = available_moves(*cur);
    if (moves.empty()) {
      run.halt = HaltReason::Blocked;
      return run;
    }
    LabeledQuadrangulation next = staircase_move(*cur, moves.front());
    run.steps.push_back({std::move(moves.front()), std::move(next)});
    cur = &run.steps.back().after;
  }
  return run;
}

}  // namespace octocf::diagch
