#include "octocf/farey.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace octocf::farey {

namespace {

const QuadNum kHalfRoot2{Rational(0), Rational(1, 2)};
const QuadNum kOnePlusRoot2{Rational(1), Rational(1)};

std::array<Mat2, 8> make_nus() {
  const QuadNum h = kHalfRoot2;
  return {{
      {1, 0, 0, 1},
      {h, h, h, -h},
      {h, h, -h, h},
      {0, 1, 1, 0},
      {0, 1, -1, 0},
      {-h, h, h, h},
      {-h, h, -h, -h},
      {-1, 0, 0, 1},
  }};
}

void check_sector(SectorIndex j) {
  if (j < 0 || j > 7) throw std::out_of_range("sector index outside 0..7: " + std::to_string(j));
}

// Directions on a sector boundary j pi / 8.
bool on_boundary_point(const Direction& d) {
  for (int j = 0; j <= 8; ++j) {
    if (d.same_as(boundary_direction(j))) return true;
  }
  return false;
}

}  // namespace

Direction::Direction(Vec2 v) : v_(std::move(v)) {
  if (v_.is_zero()) throw std::invalid_argument("Direction: zero vector");
  if (qsign(v_.y) < 0) v_ = -v_;
}

Direction Direction::from_u(const QuadNum& u) { return Direction(Vec2{u, QuadNum(1)}); }

Direction Direction::from_projective(const ProjVal& u, bool negative_side) {
  if (u.is_infinite()) return Direction(Vec2{QuadNum(negative_side ? -1 : 1), QuadNum(0)});
  return from_u(u.value());
}

ProjVal Direction::u() const {
  if (v_.y.is_zero()) return ProjVal::infinity();
  return ProjVal(v_.x / v_.y);
}

bool Direction::same_as(const Direction& o) const {
  return cross(v_, o.v_).is_zero() && qsign(dot(v_, o.v_)) > 0;
}

bool Direction::before(const Direction& o) const {
  const int c = qsign(cross(v_, o.v_));
  if (c != 0) return c > 0;
  // Antiparallel only for theta = 0 against theta = pi.
  return qsign(dot(v_, o.v_)) < 0 && qsign(v_.x) > 0;
}

std::string Direction::str() const {
  if (is_horizontal()) return qsign(v_.x) > 0 ? "theta=0" : "theta=pi";
  return "u=" + u().str();
}

Direction boundary_direction(int j) {
  static const std::array<Direction, 9> dirs = {
      Direction(Vec2{1, 0}),
      Direction(Vec2{kOnePlusRoot2, 1}),
      Direction(Vec2{1, 1}),
      Direction(Vec2{QuadNum(Rational(-1), Rational(1)), 1}),
      Direction(Vec2{0, 1}),
      Direction(Vec2{QuadNum(Rational(1), Rational(-1)), 1}),
      Direction(Vec2{-1, 1}),
      Direction(Vec2{-kOnePlusRoot2, 1}),
      Direction(Vec2{-1, 0}),
  };
  if (j < 0 || j > 8) throw std::out_of_range("boundary index outside 0..8");
  return dirs[static_cast<std::size_t>(j)];
}

const Mat2& nu(SectorIndex j) {
  static const std::array<Mat2, 8> nus = make_nus();
  check_sector(j);
  return nus[static_cast<std::size_t>(j)];
}

const Mat2& gamma() {
  static const Mat2 g{-1, QuadNum(2) * kOnePlusRoot2, 0, 1};
  return g;
}

const Mat2& branch(SectorIndex j) {
  static const std::array<Mat2, 8> branches = [] {
    std::array<Mat2, 8> out;
    for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = gamma() * nu(i);
    return out;
  }();
  check_sector(j);
  return branches[static_cast<std::size_t>(j)];
}

std::vector<SectorIndex> classify(const Direction& d) {
  // d lies in sector j iff boundary j is at or before d and d is at or
  // before boundary j+1.
  std::vector<SectorIndex> out;
  for (int j = 0; j < 8; ++j) {
    const Direction lo = boundary_direction(j);
    const Direction hi = boundary_direction(j + 1);
    const bool after_lo = lo.same_as(d) || lo.before(d);
    const bool before_hi = hi.same_as(d) || d.before(hi);
    if (after_lo && before_hi) out.push_back(j);
  }
  return out;
}

SectorIndex choose(const std::vector<SectorIndex>& candidates, TiePolicy policy) {
  if (candidates.empty()) throw std::logic_error("choose: no candidate sector");
  if (candidates.size() == 1) return candidates.front();
  if (policy == TiePolicy::High) return *std::max_element(candidates.begin(), candidates.end());
  SectorIndex best = 8;
  for (SectorIndex j : candidates) {
    if (j != 0) best = std::min(best, j);
  }
  return best == 8 ? 0 : best;
}

FoldResult fold(const Direction& d, TiePolicy policy) {
  const SectorIndex j = choose(classify(d), policy);
  return {j, Direction(nu(j) * d.vec())};
}

StepResult farey_step(const Direction& d, TiePolicy policy) {
  const auto candidates = classify(d);
  const SectorIndex j = choose(candidates, policy);
  // nu_j maps sector j onto sector 0 and gamma maps sector 0 into the
  // closed upper half plane, so the image needs no sign correction.
  return {j, Direction(branch(j) * d.vec()), candidates.size() > 1};
}

bool FareyExpansion::admissible() const {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] < 0 || entries[k] > 7) return false;
    if (k > 0 && entries[k] == 0) return false;
  }
  return true;
}

std::string FareyExpansion::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k == 1) os << ";";
    if (k > 1) os << ",";
    os << (k ? " " : "") << entries[k];
  }
  os << "]";
  return os.str();
}

FareyExpansion expand(const Direction& d, std::size_t depth, TiePolicy policy) {
  if (depth == 0) throw std::invalid_argument("expand: depth must be positive");
  FareyExpansion e;
  Direction cur = d;
  for (std::size_t k = 0; k < depth; ++k) {
    if (on_boundary_point(cur)) e.terminating = true;
    const StepResult step = farey_step(cur, policy);
    e.boundary_hit = e.boundary_hit || step.on_boundary;
    e.entries.push_back(step.sector);
    cur = step.image;
  }
  return e;
}

bool RP1Interval::contains(const Direction& d) const {
  return (start.same_as(d) || start.before(d)) && (end.same_as(d) || d.before(end));
}

bool RP1Interval::contains(const RP1Interval& inner) const {
  return contains(inner.start) && contains(inner.end);
}

std::string RP1Interval::str() const { return "[" + start.str() + ", " + end.str() + "]"; }

RP1Interval reconstruct(const std::vector<int>& prefix) {
  if (prefix.empty()) throw std::invalid_argument("reconstruct: empty prefix");
  FareyExpansion probe{prefix};
  if (!probe.admissible()) throw std::invalid_argument("reconstruct: inadmissible prefix " + probe.str());
  Vec2 a = boundary_direction(prefix.back()).vec();
  Vec2 b = boundary_direction(prefix.back() + 1).vec();
  for (auto it = prefix.rbegin() + 1; it != prefix.rend(); ++it) {
    // (gamma nu_j)^{-1} = nu_j^{-1} gamma, linear on vectors of the
    // closed upper half plane.
    const Mat2 inv = branch(*it).inverse();
    a = inv * a;
    b = inv * b;
  }
  Direction da(a), db(b);
  if (db.before(da)) std::swap(da, db);
  return {da, db};
}

std::vector<RP1Interval> nested_intervals(const std::vector<int>& prefix) {
  if (prefix.empty()) throw std::invalid_argument("nested_intervals: empty prefix");
  FareyExpansion probe{prefix};
  if (!probe.admissible()) throw std::invalid_argument("nested_intervals: inadmissible prefix " + probe.str());
  std::vector<RP1Interval> out;
  out.reserve(prefix.size());
  Mat2 m;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    Direction da(m * boundary_direction(prefix[k]).vec());
    Direction db(m * boundary_direction(prefix[k] + 1).vec());
    if (db.before(da)) std::swap(da, db);
    out.push_back({da, db});
    m = m * branch(prefix[k]).inverse();
  }
  return out;
}

FareyExpansion dual_expansion(const FareyExpansion& e) {
  if (!e.terminating) throw std::invalid_argument("dual_expansion: expansion is not terminating");
  if (e.entries.empty() || !e.admissible()) throw std::invalid_argument("dual_expansion: bad entries");
  const int tail = e.entries.back();
  if (tail != 1 && tail != 7) throw std::invalid_argument("dual_expansion: tail is neither 1 nor 7");

  FareyExpansion out = e;
  out.boundary_hit = true;
  std::size_t k = e.entries.size();
  while (k > 0 && e.entries[k - 1] == tail) --k;
  if (k == 0) {
    // Whole word is the tail: [1;1,1,...] pairs with [0;1,1,...]; an
    // all-7 word is the endpoint pi and has no partner.
    if (tail == 1) out.entries[0] = 0;
    return out;
  }
  const std::size_t pos = k - 1;
  const int s = e.entries[pos];
  // Pairs: (even, 1, 1, ...) ~ (even+1, 1, 1, ...) and
  //        (odd, 7, 7, ...)  ~ (odd+1, 7, 7, ...).
  const bool lower_member = (tail == 1) ? (s % 2 == 0) : (s % 2 == 1);
  const int partner = lower_member ? s + 1 : s - 1;
  const bool ok = partner <= 7 && (partner >= 1 || (partner == 0 && pos == 0));
  if (ok) out.entries[pos] = partner;
  return out;
}

}  // namespace octocf::farey
