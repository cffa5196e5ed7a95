#include <random>

#include "doctest.h"
#include "octocf/farey.hpp"
#include "oracles.hpp"

using namespace octocf;
using namespace octocf::farey;

namespace {

const QuadNum r2 = QuadNum::root();
const QuadNum silver = QuadNum(1) + r2;

Direction U(const QuadNum& u) { return Direction::from_u(u); }
const Direction theta0(Vec2{1, 0});
const Direction theta_pi(Vec2{-1, 0});

Direction random_direction(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-4000, 4000), den(1, 997);
  return U(QuadNum(Rational(Integer(num(rng)), Integer(den(rng))), Rational(Integer(num(rng)), Integer(den(rng) * 7))));
}

bool is_boundary(const Direction& d) {
  for (int j = 0; j <= 8; ++j) {
    if (d.same_as(boundary_direction(j))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("directions keep theta = 0 and theta = pi apart") {
  CHECK_FALSE(theta0.same_as(theta_pi));
  CHECK(theta0.u().is_infinite());
  CHECK(theta_pi.u().is_infinite());
  CHECK(theta0.before(theta_pi));
  CHECK_FALSE(theta_pi.before(theta0));
  CHECK(Direction(Vec2{-2, -2}).same_as(U(QuadNum(1))));
  CHECK_THROWS_AS(Direction(Vec2{0, 0}), std::invalid_argument);
  CHECK(Direction::from_projective(ProjVal::infinity(), true).same_as(theta_pi));
  for (int j = 0; j < 8; ++j) CHECK(boundary_direction(j).before(boundary_direction(j + 1)));
}

TEST_CASE("boundary constants") {
  CHECK(boundary_direction(1).u() == ProjVal(silver));
  CHECK(boundary_direction(2).u() == ProjVal(QuadNum(1)));
  CHECK(boundary_direction(3).u() == ProjVal(r2 - QuadNum(1)));
  CHECK(boundary_direction(4).u() == ProjVal(QuadNum(0)));
  CHECK(boundary_direction(7).u() == ProjVal(-silver));
}

TEST_CASE("classify") {
  CHECK(classify(Direction(Vec2{1, 1})) == std::vector<SectorIndex>{1, 2});
  CHECK(classify(theta0) == std::vector<SectorIndex>{0});
  CHECK(classify(U(QuadNum(2))) == std::vector<SectorIndex>{1});
  CHECK(classify(theta_pi) == std::vector<SectorIndex>{7});
  CHECK(classify(U(QuadNum(-3))) == std::vector<SectorIndex>{7});
  CHECK(classify(U(QuadNum(5))) == std::vector<SectorIndex>{0});
}

TEST_CASE("fold") {
  const Direction d = U(QuadNum(7));
  CHECK(fold(d).sector == 0);
  CHECK(fold(d).folded.same_as(d));
  const auto f = fold(Direction(Vec2{0, 1}));
  CHECK(f.sector == 3);
  CHECK(f.folded.vec() == Vec2{1, 0});
  const auto g = fold(Direction(Vec2{-1, 1}));
  CHECK(g.sector == 5);
  CHECK(g.folded.vec() == Vec2{r2, 0});
  CHECK(fold(Direction(Vec2{0, 1}), TiePolicy::High).sector == 4);
}

TEST_CASE("farey_step examples") {
  const auto a = farey_step(theta_pi);
  CHECK(a.sector == 7);
  CHECK(a.image.same_as(theta_pi));
  const auto b = farey_step(theta0);
  CHECK(b.sector == 0);
  CHECK(b.image.same_as(theta_pi));
  const auto c = farey_step(U(silver));
  CHECK(c.sector == 1);
  CHECK(c.on_boundary);
  CHECK(c.image.u() == ProjVal(silver));
}

TEST_CASE("expand examples") {
  CHECK(expand(theta_pi, 4).entries == std::vector<int>{7, 7, 7, 7});
  CHECK(expand(theta_pi, 4).terminating);
  CHECK(expand(theta0, 4).entries == std::vector<int>{0, 7, 7, 7});
  const auto e = expand(U(silver), 4);
  CHECK(e.entries == std::vector<int>{1, 1, 1, 1});
  CHECK(e.boundary_hit);
  CHECK(e.terminating);
  CHECK(e.str() == "[1; 1, 1, 1]");
  CHECK(expand(U(silver), 4, TiePolicy::High).entries == std::vector<int>{1, 1, 1, 1});
  CHECK(expand(U(QuadNum(1)), 3).boundary_hit);
  CHECK(expand(U(QuadNum(2)), 1).entries == std::vector<int>{1});
  CHECK_THROWS_AS(expand(theta0, 0), std::invalid_argument);
  CHECK(expand(U(QuadNum(Rational(3), Rational(1, 3))), 40).admissible());
}

TEST_CASE("gamma and branch structure") {
  CHECK(gamma() * gamma() == Mat2::identity());
  for (int j = 0; j < 8; ++j) {
    CHECK(branch(j) == gamma() * nu(j));
    CHECK(abs(nu(j).det()) == QuadNum(1));
    // nu_j maps sector j onto sector 0.
    const Direction lo(nu(j) * boundary_direction(j).vec());
    const Direction hi(nu(j) * boundary_direction(j + 1).vec());
    const bool forward = lo.same_as(boundary_direction(0)) && hi.same_as(boundary_direction(1));
    const bool backward = hi.same_as(boundary_direction(0)) && lo.same_as(boundary_direction(1));
    CHECK((forward || backward));
    CHECK((branch(j).det() == QuadNum(j % 2 ? 1 : -1)));
  }
  // gamma nu_1 is parabolic.
  CHECK(branch(1).a + branch(1).d == QuadNum(2));
}

TEST_CASE("continuity at the interior sector boundaries") {
  for (int j = 0; j <= 6; ++j) {
    const Vec2 b = boundary_direction(j + 1).vec();
    CHECK(Direction(branch(j) * b).same_as(Direction(branch(j + 1) * b)));
  }
}

TEST_CASE("each branch maps its sector onto the full range") {
  const Direction top = boundary_direction(1);
  for (int j = 0; j < 8; ++j) {
    const Direction a(branch(j) * boundary_direction(j).vec());
    const Direction b(branch(j) * boundary_direction(j + 1).vec());
    const bool ok = (a.same_as(top) && b.same_as(theta_pi)) || (b.same_as(top) && a.same_as(theta_pi));
    CHECK(ok);
  }
}

TEST_CASE("shift property, vector/moebius consistency, reconstruction") {
  std::mt19937_64 rng(oracle::seed() + 10);
  for (int t = 0; t < 60; ++t) {
    const Direction d = random_direction(rng);
    if (is_boundary(d)) continue;
    const auto e = expand(d, 12);
    if (e.boundary_hit) continue;
    const auto step = farey_step(d);
    const auto e2 = expand(step.image, 11);
    CHECK(std::vector<int>(e.entries.begin() + 1, e.entries.end()) == e2.entries);
    // The Möbius action on u agrees with the linear action on vectors.
    const ProjVal pu = moebius(branch(step.sector), d.u());
    CHECK(pu == step.image.u());
    // Nested intervals containing d.
    std::optional<RP1Interval> prev;
    for (std::size_t k = 1; k <= e.entries.size(); ++k) {
      const RP1Interval iv = reconstruct(std::vector<int>(e.entries.begin(), e.entries.begin() + k));
      CHECK(iv.contains(d));
      if (prev) CHECK(prev->contains(iv));
      prev = iv;
    }
  }
}

TEST_CASE("reconstruct examples") {
  const RP1Interval s7 = reconstruct({7});
  CHECK(s7.u_hi() == ProjVal(-silver));
  CHECK(s7.u_lo().is_infinite());
  CHECK(s7.end.same_as(theta_pi));
  const RP1Interval s0 = reconstruct({0});
  CHECK(s0.start.same_as(theta0));
  CHECK_THROWS_AS(reconstruct({}), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct({8}), std::invalid_argument);
}

TEST_CASE("nested_intervals agrees with reconstruct and nests") {
  std::mt19937_64 rng(oracle::seed() + 7);
  std::uniform_int_distribution<int> first(0, 7), rest(1, 7);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> p{first(rng)};
    while (p.size() < 15) p.push_back(rest(rng));
    const auto all = nested_intervals(p);
    REQUIRE(all.size() == p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      const RP1Interval r = reconstruct({p.begin(), p.begin() + static_cast<long>(k) + 1});
      CHECK(all[k].start.same_as(r.start));
      CHECK(all[k].end.same_as(r.end));
      if (k > 0) CHECK(all[k - 1].contains(all[k]));
    }
  }
  CHECK_THROWS_AS(nested_intervals({}), std::invalid_argument);
  CHECK_THROWS_AS(nested_intervals({3, 0}), std::invalid_argument);
}

TEST_CASE("dual expansions") {
  auto term = [](std::vector<int> v) { return FareyExpansion{std::move(v), false, true}; };
  CHECK(dual_expansion(term({2, 1, 1, 1})).entries == std::vector<int>{3, 1, 1, 1});
  CHECK(dual_expansion(term({3, 1, 1, 1})).entries == std::vector<int>{2, 1, 1, 1});
  CHECK(dual_expansion(term({1, 7, 7})).entries == std::vector<int>{2, 7, 7});
  CHECK(dual_expansion(term({0, 7, 7})).entries == std::vector<int>{0, 7, 7});
  CHECK(dual_expansion(term({7, 7, 7})).entries == std::vector<int>{7, 7, 7});
  CHECK(dual_expansion(term({1, 1, 1})).entries == std::vector<int>{0, 1, 1});
  CHECK(dual_expansion(term({5, 4, 1, 1})).entries == std::vector<int>{5, 5, 1, 1});
  CHECK_THROWS_AS(dual_expansion(FareyExpansion{{2, 1}, false, false}), std::invalid_argument);
  // Both members of a pair describe the same direction: their intervals
  // share an endpoint.
  const RP1Interval a = reconstruct({2, 1, 1, 1, 1, 1});
  const RP1Interval b = reconstruct({3, 1, 1, 1, 1, 1});
  CHECK((a.end.same_as(b.start) || b.end.same_as(a.start) || a.start.same_as(b.end) || a.start.same_as(b.start) ||
         a.end.same_as(b.end)));
  // The terminating direction itself (u = 1: boundary of sectors 1 and 2)
  // has the two expansions.
  CHECK(expand(U(QuadNum(1)), 3).entries == std::vector<int>{1, 7, 7});
  CHECK(expand(U(QuadNum(1)), 3, TiePolicy::High).entries == std::vector<int>{2, 7, 7});
}
