#include "doctest.h"

#include "foxnorm/error.hpp"
#include "foxnorm/fox.hpp"
#include "support.hpp"

using namespace foxnorm;

namespace {

MarkedPolytope poly(std::initializer_list<LatticePoint> pts, int rank = 2) {
  std::vector<QPoint> q;
  for (const auto& p : pts) q.push_back(QPoint::lattice(p));
  return hull(q, rank);
}

MarkedPolytope marked_all(std::initializer_list<LatticePoint> pts, int rank = 2) {
  return poly(pts, rank).all_marked();
}

/// Brute-force Minkowski difference over a half-integral box: the set
/// {p : p + Q inside R}, accepted only when its hull plus Q gives back R.
std::optional<MarkedPolytope> brute_diff(const MarkedPolytope& r, const MarkedPolytope& q, std::int64_t box) {
  std::vector<QPoint> inside;
  const std::int64_t ylim = r.rank() == 2 ? 2 * box : 0;
  for (std::int64_t a = -2 * box; a <= 2 * box; ++a) {
    for (std::int64_t b = -ylim; b <= ylim; ++b) {
      const QPoint p = QPoint::halves(a, b);
      bool ok = true;
      for (const auto& w : q.vertices()) ok = ok && contains(r, p + w);
      if (ok) inside.push_back(p);
    }
  }
  if (inside.empty()) return std::nullopt;
  MarkedPolytope p = hull(inside, r.rank());
  if (minkowski_sum(p, q.unmarked()).vertices() != r.vertices()) return std::nullopt;
  return p;
}

Rational abs(Rational r) { return r < Rational(0) ? -r : r; }

}  // namespace

TEST_CASE("hull is canonical") {
  const MarkedPolytope p = poly({{2, 3}, {0, -1}, {1, 1}, {2, 1}, {0, 1}});
  CHECK(p.to_string() == "[(0,-1), (2,1), (2,3), (0,1)]");
  CHECK(p.dimension() == 2);
  CHECK(poly({{3, 0}, {0, 0}, {1, 0}}, 1).to_string() == "[(0), (3)]");
  CHECK(poly({{1, 1}, {1, 1}}).dimension() == 0);
  CHECK(poly({{0, 0}, {2, 2}, {1, 1}}).size() == 2);
}

TEST_CASE("Newton polytope of the Dunfield r_x") {
  const Presentation p = Presentation::from_text(support::kDunfield);
  const RingElt r_x = fox_derivative(p.relator(), Generator::x);
  const MarkedPolytope m = polytope_of(r_x, psi(p));
  CHECK(m.vertices() == poly({{0, 1}, {2, 3}, {2, 1}, {0, -1}}).vertices());
  CHECK(m.is_marked(*m.index_of(QPoint::lattice({0, 1}))));
  CHECK(m.is_marked(*m.index_of(QPoint::lattice({2, 1}))));
  CHECK_FALSE(m.is_marked(*m.index_of(QPoint::lattice({2, 3}))));
  CHECK_FALSE(m.is_marked(*m.index_of(QPoint::lattice({0, -1}))));
  CHECK(thickness(m, Covector::of(1, 0)) == Rational(2));
  CHECK(thickness(m, Covector::of(0, 1)) == Rational(4));
  CHECK(pairs_maximally(m, Covector::of(0, 1)) == m.index_of(QPoint::lattice({2, 3})));
  CHECK_FALSE(pairs_maximally(m, Covector::of(1, 0)).has_value());
}

TEST_CASE("marking rule of a Laurent polynomial") {
  LaurentElt f(2);
  f.add_term({0, 0}, 1);
  f.add_term({1, 0}, -2);
  f.add_term({0, 1}, -1);
  f.add_term({1, 1}, 3);
  const MarkedPolytope m = polytope_of(f);
  CHECK(m.to_string() == "[(0,0)*, (1,0), (1,1), (0,1)*]");
  CHECK_THROWS_AS(polytope_of(LaurentElt(2)), Error);
}

TEST_CASE("marked Minkowski sum examples") {
  const MarkedPolytope seg = marked_all({{0, 0}, {1, 0}});
  MarkedPolytope tri = marked_all({{0, 0}, {0, 1}, {1, 1}});
  tri.set_marked(*tri.index_of(QPoint::lattice({1, 1})), false);
  const MarkedPolytope s = minkowski_sum(seg, tri);
  CHECK(s.to_string() == "[(0,0)*, (1,0)*, (2,1), (0,1)*]");
}

TEST_CASE("Minkowski difference examples") {
  const MarkedPolytope sq = marked_all({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const MarkedPolytope xseg = marked_all({{0, 0}, {1, 0}});
  const MarkedPolytope yseg = marked_all({{0, 0}, {0, 1}});
  const auto d = minkowski_diff(sq, xseg);
  REQUIRE(d);
  CHECK(*d == yseg);
  CHECK_FALSE(minkowski_diff(xseg, sq).has_value());
  CHECK_FALSE(minkowski_diff(marked_all({{0, 0}, {1, 1}}), xseg).has_value());
  CHECK(*minkowski_diff(sq, sq) == marked_all({{0, 0}}));
}

TEST_CASE("Minkowski difference detects inconsistent marks") {
  MarkedPolytope sq = marked_all({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  MarkedPolytope xseg = marked_all({{0, 0}, {1, 0}});
  xseg.set_marked(0, false);
  // (0,0) = (0,0) + (0,0) is marked in R but its only decomposition uses an
  // unmarked vertex of Q.
  CHECK_THROWS_AS(minkowski_diff(sq, xseg), Error);
}

TEST_CASE("Minkowski difference agrees with brute-force enumeration") {
  std::mt19937_64 rng(41);
  int existing = 0;
  for (int i = 0; i < 300; ++i) {
    const int rank = i % 5 == 0 ? 1 : 2;
    const MarkedPolytope a = support::random_polytope(rng, rank, 1 + rng() % 4, 2);
    const MarkedPolytope q = support::random_polytope(rng, rank, 1 + rng() % 3, 1);
    // Half the time R is a genuine sum, otherwise an unrelated polytope.
    const MarkedPolytope r =
        (i % 2 == 0 ? minkowski_sum(a, q) : support::random_polytope(rng, rank, 2 + rng() % 5, 3)).unmarked();
    const auto fast = minkowski_diff(r, q.unmarked());
    const auto slow = brute_diff(r, q, 6);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      ++existing;
      CHECK(fast->vertices() == slow->vertices());
    }
  }
  CHECK(existing >= 150);
}

TEST_CASE("marked Minkowski round trip") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const int rank = i % 4 == 0 ? 1 : 2;
    const MarkedPolytope p = support::random_polytope(rng, rank, 1 + rng() % 5, 3);
    const MarkedPolytope q = support::random_polytope(rng, rank, 1 + rng() % 4, 2).all_marked();
    const auto back = minkowski_diff(minkowski_sum(p, q), q);
    REQUIRE(back);
    CHECK(*back == p);
  }
}

TEST_CASE("Minkowski sum marks match a brute-force decomposition") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const MarkedPolytope p = support::random_polytope(rng, 2, 1 + rng() % 5, 3);
    const MarkedPolytope q = support::random_polytope(rng, 2, 1 + rng() % 5, 3);
    const MarkedPolytope s = minkowski_sum(p, q);
    for (std::size_t k = 0; k < s.size(); ++k) {
      int decompositions = 0;
      bool both = false;
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) {
          if (p.vertex(a) + q.vertex(b) != s.vertex(k)) continue;
          ++decompositions;
          both = p.is_marked(a) && q.is_marked(b);
        }
      }
      CHECK(decompositions == 1);
      CHECK(s.is_marked(k) == both);
    }
  }
}

TEST_CASE("Newton polytopes are additive, marks included") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 200; ++i) {
    const int rank = i % 3 == 0 ? 1 : 2;
    const LaurentElt f = support::random_laurent(rng, rank, 1 + rng() % 5, 3);
    const LaurentElt g = support::random_laurent(rng, rank, 1 + rng() % 5, 3);
    CHECK(polytope_of(f * g) == minkowski_sum(polytope_of(f), polytope_of(g)));
  }
}

TEST_CASE("thickness is an additive seminorm") {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 300; ++i) {
    const MarkedPolytope p = support::random_polytope(rng, 2, 1 + rng() % 6, 4);
    const MarkedPolytope q = support::random_polytope(rng, 2, 1 + rng() % 6, 4);
    const Covector phi = support::random_covector(rng, 2, 5);
    const Covector chi = support::random_covector(rng, 2, 5);
    const Rational k(static_cast<std::int64_t>(rng() % 9) - 4, 1 + static_cast<std::int64_t>(rng() % 3));
    CHECK(thickness(p, phi) >= Rational(0));
    CHECK(thickness(p, k * phi) == abs(k) * thickness(p, phi));
    CHECK(thickness(p, phi + chi) <= thickness(p, phi) + thickness(p, chi));
    CHECK(thickness(minkowski_sum(p, q), phi) == thickness(p, phi) + thickness(q, phi));
    CHECK(thickness(symmetrize(p), phi) == thickness(p, phi));
    CHECK(thickness(negate(p), phi) == thickness(p, phi));
  }
}

TEST_CASE("symmetrization") {
  const MarkedPolytope m = poly({{0, -1}, {2, 1}, {2, 2}, {0, 0}});
  const MarkedPolytope s = symmetrize(m);
  CHECK(thickness(s, Covector::of(1, 0)) == Rational(2));
  CHECK(thickness(s, Covector::of(0, 1)) == Rational(3));
  CHECK(translation_equiv(s, negate(s)));
  const MarkedPolytope half(1, {QPoint::halves(0), QPoint::halves(1)}, {false, false});
  CHECK_THROWS_AS(symmetrize(half), Error);
}

TEST_CASE("translation equivalence") {
  const MarkedPolytope p = marked_all({{0, 0}, {2, 1}, {1, 3}});
  CHECK(translation_equiv(p, translate(p, QPoint::halves(3, -1))));
  CHECK_FALSE(translation_equiv(p, p.unmarked()));
  CHECK_FALSE(translation_equiv(p, scale(p, 2)));
}

TEST_CASE("dual ball examples") {
  const DualBall sq = dual_ball(poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(sq.kind == DualBall::Kind::Bounded);
  CHECK(sq.vertices.size() == 4);
  CHECK(sq.gauge(Covector::of(1, 1)) == Rational(2));
  const DualBall seg = dual_ball(poly({{0, 0}, {3, 0}}, 1));
  REQUIRE(seg.vertices.size() == 2);
  CHECK(seg.vertices[0][0] == Rational(-1, 3));
  CHECK(seg.vertices[1][0] == Rational(1, 3));
  CHECK(dual_ball(poly({{0, 0}, {1, 2}})).kind == DualBall::Kind::Strip);
  CHECK_THROWS_AS(dual_ball(poly({{1, 1}})), Error);
}

TEST_CASE("dual ball gauge reproduces thickness") {
  std::mt19937_64 rng(46);
  for (int i = 0; i < 200; ++i) {
    const int rank = i % 4 == 0 ? 1 : 2;
    const MarkedPolytope p = support::random_polytope(rng, rank, 2 + rng() % 6, 4);
    if (p.dimension() == 0) continue;
    const DualBall ball = dual_ball(p);
    for (int j = 0; j < 10; ++j) {
      const Covector phi = support::random_covector(rng, rank, 6);
      CHECK(ball.gauge(phi) == thickness(p, phi));
    }
    for (const auto& f : ball.faces) CHECK(f.normal == f.paired - f.opposite);
  }
}
