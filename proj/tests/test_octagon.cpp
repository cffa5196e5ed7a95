#include <random>

#include "doctest.h"
#include "octocf/json_io.hpp"
#include "octocf/octagon.hpp"
#include "oracles.hpp"

using namespace octocf;
using namespace octocf::octagon;

namespace {

const QuadNum r2 = QuadNum::root();
const QuadNum h = r2 / QuadNum(2);

// Vertices of the side-1 regular octagon with a horizontal bottom side.
std::vector<Vec2> octagon_vertices() {
  const QuadNum one(1);
  return {{0, 0},           {one, 0},          {one + h, h},      {one + h, one + h},
          {one, one + h + h}, {0, one + h + h}, {-h, one + h},     {-h, h}};
}

QuadNum area_oracle(const std::vector<Vec2>& v, const std::vector<std::size_t>& pi_l) {
  QuadNum total(0);
  for (std::size_t i = 0; i < pi_l.size(); ++i) {
    const Vec2& wl = v[2 * i];
    const Vec2& wr = v[2 * i + 1];
    const Vec2 d{wl.x + v[2 * pi_l[i] + 1].x, wl.y + v[2 * pi_l[i] + 1].y};
    total += (cross(d, wl) + cross(wr, d)) / QuadNum(2);
  }
  return total;
}

using Row = std::vector<QuadNum>;

// Basis of the kernel of m over Q(√2), by Gauss-Jordan elimination.
std::vector<Row> kernel(std::vector<Row> m) {
  const std::size_t cols = m.front().size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const QuadNum inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const QuadNum f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Row v(cols, QuadNum(0));
    v[free] = QuadNum(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// (A kron g) - I on the 12 coordinates (x, y) of six vectors.
std::vector<Row> fixed_point_system(const IntMatrix& a, const Mat2& g) {
  const QuadNum gm[2][2] = {{g.a, g.b}, {g.c, g.d}};
  std::vector<Row> m(12, Row(12, QuadNum(0)));
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t k = 0; k < 6; ++k) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) m[2 * j + c][2 * k + d] = QuadNum(a(j, k)) * gm[c][d];
      }
    }
  }
  for (std::size_t i = 0; i < 12; ++i) m[i][i] -= QuadNum(1);
  return m;
}

Direction interior(int sector) { return default_samples(sector, 1).front(); }

}  // namespace

TEST_CASE("Q' vectors are chords of the octagon") {
  const auto verts = octagon_vertices();
  for (const Vec2& w : qprime_vectors()) {
    int found = 0;
    for (const Vec2& p : verts) {
      for (const Vec2& q : verts) {
        if (Vec2{q.x - p.x, q.y - p.y} == w) ++found;
      }
    }
    CHECK_MESSAGE(found >= 1, w.str());
  }
  CHECK(octagon_area() == QuadNum(2) + QuadNum(2) * r2);
  CHECK(area_oracle(qprime_vectors(), {1, 0, 2}) == octagon_area());
}

TEST_CASE("Q' spans the fixed space of every branch") {
  std::vector<Row> all;
  for (int i = 1; i <= 7; ++i) {
    const auto sys = fixed_point_system(h2moves::sector_matrix(i), farey::branch(i));
    const auto ker = kernel(sys);
    // One branch alone can fix more than Q' (sector 7 is parabolic).
    CHECK_MESSAGE(!ker.empty(), "sector " << i);
    all.insert(all.end(), sys.begin(), sys.end());
  }
  const auto ker = kernel(all);
  REQUIRE(ker.size() == 1);
  // Normalize so that w_{1,l} = (-1, 0), then compare.
  const QuadNum s = -ker[0][0].inverse();
  std::vector<Vec2> v;
  for (std::size_t j = 0; j < 6; ++j) v.push_back({ker[0][2 * j] * s, ker[0][2 * j + 1] * s});
  CHECK(v == qprime_vectors());
  CHECK(area_oracle(v, {1, 0, 2}) == octagon_area());
}

TEST_CASE("initial quadrangulations") {
  for (int s0 = 0; s0 < 8; ++s0) {
    const auto q = initial_quadrangulation(s0);
    CHECK(diagch::total_area(q) == octagon_area());
  }
  CHECK(diagch::total_area(q0()) == octagon_area());
  CHECK(diagch::total_area(qprime()) == octagon_area());
}

TEST_CASE("verify_sector examples") {
  const auto r1 = verify_sector(1, Direction::from_u((QuadNum(2) + r2) / QuadNum(2)));
  CHECK(r1.ok());
  CHECK(r1.matrix == h2moves::sector_matrix(1));
  const auto r7 = verify_sector(7, Direction::from_u(QuadNum(-3)));
  CHECK(r7.ok());
  CHECK_THROWS_AS(verify_sector(3, Direction::from_u(r2 - QuadNum(1))), std::invalid_argument);
  CHECK_THROWS_AS(verify_sector(1, Direction::from_u(QuadNum(-3))), std::invalid_argument);
  CHECK_THROWS_AS(verify_sector(0, Direction::from_u(QuadNum(5))), std::out_of_range);
}

TEST_CASE("every sector sample verifies, including random ones") {
  std::mt19937_64 rng(oracle::seed() + 30);
  for (int i = 1; i <= 7; ++i) {
    const auto lo = farey::boundary_direction(i);
    const auto hi = farey::boundary_direction(i + 1);
    for (int t = 0; t < 2; ++t) {
      // A convex combination of the boundary vectors is strictly inside.
      std::uniform_int_distribution<long> n(1, 999);
      const QuadNum w(Rational(n(rng), 1000));
      const Vec2 v{lo.vec().x * w + hi.vec().x * (QuadNum(1) - w), lo.vec().y * w + hi.vec().y * (QuadNum(1) - w)};
      const auto rep = verify_sector(i, Direction(v));
      CHECK_MESSAGE(rep.ok(), "sector " << i << " " << rep.closure_detail << rep.move_error);
      CHECK(rep.parity == (i % 2 == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("theorem: parallel agrees with serial") {
  const auto par = verify_theorem();
  const auto ser = verify_theorem_serial();
  CHECK(par.ok());
  CHECK(ser.ok());
  REQUIRE(par.samples.size() == 21);
  REQUIRE(ser.samples.size() == 21);
  CHECK(par.identities.size() == 5);
  for (std::size_t k = 0; k < 21; ++k) {
    CHECK(par.samples[k].sector == ser.samples[k].sector);
    CHECK(par.samples[k].theta.same_as(ser.samples[k].theta));
    CHECK(par.samples[k].matrix == ser.samples[k].matrix);
    CHECK(par.samples[k].ok() == ser.samples[k].ok());
  }
}

TEST_CASE("corrupted expected matrix is reported") {
  std::array<IntMatrix, 7> expected;
  for (int i = 1; i <= 7; ++i) expected[i - 1] = h2moves::sector_matrix(i);
  auto bad = expected[3];
  auto rows = bad.rows();
  rows[2][5] += 1;
  expected[3] = IntMatrix::from_rows(rows);
  const auto rep = verify_sector(4, interior(4), &expected[3]);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.matrix_ok);
  REQUIRE(rep.mismatch);
  CHECK(rep.mismatch->row == 2);
  CHECK(rep.mismatch->col == 5);
  TheoremOptions opt;
  opt.sectors = {4, 5};
  opt.samples = 1;
  opt.expected = expected;
  const auto th = verify_theorem(opt);
  CHECK_FALSE(th.ok());
  REQUIRE(th.samples.size() == 2);
  CHECK_FALSE(th.samples[0].ok());
  CHECK(th.samples[1].ok());
}

TEST_CASE("expansion runs") {
  const Direction theta = Direction::from_u(QuadNum(Rational(3, 7), Rational(5, 11)));
  const auto t = run_expansion(theta, 12);
  CHECK(t.ok());
  CHECK(t.error.empty());
  REQUIRE(t.steps.size() == 12);
  CHECK(t.expansion.entries.size() == 13);
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    CHECK(t.steps[k].sector == t.expansion.entries[k + 1]);
    CHECK(t.steps[k].conjugation_ok);
    CHECK(t.steps[k].nested_ok);
    CHECK(t.steps[k].area_ok);
  }
  const auto zero = run_expansion(theta, 0);
  CHECK(zero.ok());
  CHECK(zero.steps.empty());
  const auto pi = run_expansion(Direction::from_projective(ProjVal::infinity(), true), 5);
  CHECK(pi.hit_singularity);
  CHECK(pi.steps.empty());
  const auto rational = run_expansion(Direction::from_u(QuadNum(Rational(7, 3))), 60);
  CHECK(rational.hit_singularity);
  CHECK(rational.steps.size() < 60);
  CHECK(rational.error.empty());
}

TEST_CASE("parallel expansions agree with serial") {
  std::vector<Direction> thetas;
  for (int j = 1; j <= 6; ++j) thetas.push_back(Direction::from_u(QuadNum(Rational(j, 3), Rational(1, j + 1))));
  const auto par = run_expansions(thetas, 8);
  const auto ser = run_expansions_serial(thetas, 8);
  REQUIRE(par.size() == ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) {
    CHECK(par[k].expansion == ser[k].expansion);
    CHECK(par[k].ok() == ser[k].ok());
    CHECK(par[k].steps.size() == ser[k].steps.size());
  }
}

TEST_CASE("json round trips") {
  using namespace json_io;
  const QuadNum q(Rational(-3, 4), Rational(5, 7));
  CHECK(quadnum_from_json(to_json(q)) == q);
  const Vec2 v{q, QuadNum(2)};
  CHECK(vec_from_json(to_json(v)) == v);
  CHECK(matrix_from_json(to_json(h2moves::sector_matrix(5))) == h2moves::sector_matrix(5));
  const Permutation p = Permutation::parse("(1,3,2)", 3);
  CHECK(permutation_from_json(to_json(p)) == p);
  const auto qp = qprime(interior(2));
  CHECK(quadrangulation_from_json(to_json(qp)) == qp);
  const auto e = farey::expand(interior(3), 6);
  CHECK(expansion_from_json(to_json(e)) == e);
  CHECK_THROWS_AS(quadnum_from_json(json{{"a", "x"}}), ParseError);
  CHECK_THROWS_AS(quadnum_from_json(json::array({1, 2})), JsonError);
  CHECK_THROWS_AS(matrix_from_json(json::array({json::array({1, 2}), json::array({3})})), JsonError);
  const auto trace = sector_trace(run_sector_word(2, interior(2)));
  CHECK(trace.at("panels").size() == h2moves::sector_raw_word(2).size() + 1);
}
