#include "doctest.h"

#include "best_approx.hpp"
#include "octocf/classical.hpp"

using namespace octocf;
using namespace octocf::classical;

namespace {

// Drops a convergent when the next one has the same denominator (only the
// later one can be a best approximation).
std::vector<IntVec2> distinct_denominators(const std::vector<IntVec2>& c) {
  std::vector<IntVec2> out;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n + 1 < c.size() && c[n + 1].q == c[n].q) continue;
    out.push_back(c[n]);
  }
  return out;
}

template <int D>
void check_against_brute_force(const Quadratic<D>& alpha, double approx) {
  const auto best = oracle::best_approximations(alpha, approx, 10000);
  auto conv = distinct_denominators(geometric_convergents(alpha, 40).convergents);
  std::vector<IntVec2> within;
  for (const auto& v : conv) {
    if (v.q <= 10000) within.push_back(v);
  }
  REQUIRE(within.size() == best.size());
  for (std::size_t n = 0; n < best.size(); ++n) {
    CHECK(within[n] == best[n]);
  }
}

}  // namespace

TEST_CASE("gauss_step") {
  auto s = gauss_step(QuadNum(Rational(1, 2)));
  CHECK(s.digit == 2);
  CHECK(s.rest.is_zero());
  auto t = gauss_step(QuadNum::root() - QuadNum(1));
  CHECK(t.digit == 2);
  CHECK(t.rest == QuadNum::root() - QuadNum(1));
  auto u = gauss_step(QuadNum(Rational(2, 5)));
  CHECK(u.digit == 2);
  CHECK(u.rest == QuadNum(Rational(1, 2)));
  CHECK_THROWS_AS(gauss_step(QuadNum(0)), std::domain_error);
  CHECK_THROWS_AS(gauss_step(QuadNum(1)), std::domain_error);
}

TEST_CASE("geometric convergents of √2") {
  const auto run = geometric_convergents(QuadNum::root(), 4);
  REQUIRE(run.convergents.size() == 4);
  CHECK(run.convergents[0] == IntVec2{1, 1});
  CHECK(run.convergents[1] == IntVec2{3, 2});
  CHECK(run.convergents[2] == IntVec2{7, 5});
  CHECK(run.convergents[3] == IntVec2{17, 12});
  CHECK_FALSE(run.halted);
  CHECK(run.intermediates[2] == std::vector<IntVec2>{{4, 3}});
  CHECK(run.pair(0).e_prev == IntVec2{1, 0});
}

TEST_CASE("golden ratio gives Fibonacci pairs and no intermediates") {
  const auto run = geometric_convergents(golden_ratio(), 5);
  const std::vector<IntVec2> fib{{1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}};
  CHECK(run.convergents == fib);
  for (const auto& step : run.intermediates) CHECK(step.empty());
  for (const auto& a : run.digits) CHECK(a == 1);
}

TEST_CASE("rational alpha halts on the line") {
  const auto run = geometric_convergents(QuadNum(2), 10);
  CHECK(run.halted);
  REQUIRE(run.convergents.size() == 1);
  CHECK(run.convergents[0] == IntVec2{2, 1});
  const auto r = geometric_convergents(QuadNum(Rational(7, 5)), 10);
  CHECK(r.halted);
  CHECK(r.convergents.back() == IntVec2{7, 5});
  CHECK_THROWS_AS(geometric_convergents(QuadNum(-1), 3), std::domain_error);
}

TEST_CASE("unimodularity and alternating sides") {
  for (const QuadNum& alpha : {QuadNum::root(), QuadNum(Rational(1, 3), Rational(5, 7)), QuadNum(3) + QuadNum::root()}) {
    const auto run = geometric_convergents(alpha, 30);
    REQUIRE(run.convergents.size() == 30);
    for (std::size_t n = 0; n < 30; ++n) {
      const auto pr = run.pair(n);
      const Integer det = cross(pr.e_curr, pr.e_prev);
      CHECK((det == 1 || det == -1));
      const auto side = [&](const IntVec2& e) { return qsign(alpha * QuadNum(Rational(e.q)) - QuadNum(Rational(e.p))); };
      CHECK(side(run.convergents[n]) != 0);
      if (n > 0) CHECK(side(run.convergents[n]) == -side(run.convergents[n - 1]));
    }
  }
}

TEST_CASE("convergents are the brute-force best approximations") {
  check_against_brute_force(QuadNum::root(), std::sqrt(2.0));
  check_against_brute_force(golden_ratio(), (1 + std::sqrt(5.0)) / 2);
  check_against_brute_force(QuadNum(Rational(2, 3), Rational(1, 5)), 2.0 / 3 + std::sqrt(2.0) / 5);
}

TEST_CASE("approximation sequence interleaves intermediates") {
  const auto run = geometric_convergents(QuadNum(3) + QuadNum::root(), 3);
  // digits 4, 2, 2 (4+√2 = [4; 2, 2, ...]); e_0 = (4, 1) has no recorded
  // intermediates beyond (1,1),(2,1),(3,1).
  CHECK(run.digits[0] == 4);
  const auto seq = approximation_sequence(run);
  CHECK(seq.front() == IntVec2{1, 1});
  CHECK(seq[3] == IntVec2{4, 1});
  CHECK(seq.back() == run.convergents.back());
  CHECK(intermediate_convergents(QuadNum(3) + QuadNum::root(), 3) == run.intermediates);
}
