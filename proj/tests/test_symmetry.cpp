#include "doctest.h"

#include <set>

#include "foxnorm/error.hpp"
#include "foxnorm/symmetry.hpp"
#include "support.hpp"

using namespace foxnorm;

namespace {

MarkedPolytope poly(std::initializer_list<LatticePoint> pts) {
  std::vector<QPoint> q;
  for (const auto& p : pts) q.push_back(QPoint::lattice(p));
  return hull(q);
}

std::set<std::pair<QPoint, QPoint>> as_set(const OppositePairing& pairing, bool swap = false) {
  std::set<std::pair<QPoint, QPoint>> out;
  for (const auto& p : pairing.pairs) out.insert(swap ? std::pair{p.w, p.v} : std::pair{p.v, p.w});
  return out;
}

}  // namespace

TEST_CASE("opposite vertices of a square and itself") {
  const MarkedPolytope sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const OppositePairing pairing = opposite_pairs(sq, sq);
  CHECK(pairing.pairs.size() == 4);
  CHECK(pairing.all_unique());
  for (const auto& p : pairing.pairs) CHECK(p.v + p.w == QPoint::lattice({1, 1}));
}

TEST_CASE("witnesses are strictly extremal") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const MarkedPolytope a = support::random_polytope(rng, 2, 1 + rng() % 6, 3);
    const MarkedPolytope b = support::random_polytope(rng, 2, 1 + rng() % 6, 3);
    const OppositePairing pairing = opposite_pairs(a, b);
    CHECK_FALSE(pairing.pairs.empty());
    for (const auto& p : pairing.pairs) {
      CHECK(pairs_maximally(a, p.witness) == a.index_of(p.v));
      CHECK(pairs_maximally(b, -p.witness) == b.index_of(p.w));
    }
    // Swapping the roles of the polytopes swaps the pairs.
    CHECK(as_set(opposite_pairs(b, a), true) == as_set(pairing));
  }
}

TEST_CASE("every vertex of a polygon has an opposite partner in itself") {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 100; ++i) {
    const MarkedPolytope a = support::random_polytope(rng, 2, 3 + rng() % 6, 4);
    std::set<QPoint> seen;
    for (const auto& p : opposite_pairs(a, a).pairs) seen.insert(p.v);
    CHECK(seen.size() == a.size());
  }
}

TEST_CASE("Dunfield pairings") {
  const Presentation p = Presentation::from_text(support::kDunfield);
  const SymmetryPairings s = opposite_pairs(p);
  CHECK(s.p_rx.size() == 4);
  CHECK(s.within_rx.pairs.size() == 4);
  CHECK(s.within_rx.all_unique());
  bool v2w2 = false;
  for (const auto& pr : s.within_rx.pairs) {
    v2w2 = v2w2 || (pr.v == QPoint::lattice({2, 3}) && pr.w == QPoint::lattice({0, -1}));
  }
  CHECK(v2w2);
  CHECK_THROWS_AS(opposite_pairs(Presentation::from_text("xyxYXY")), Error);
}

TEST_CASE("Dunfield symmetry check verifies the within-r_x pairs with sign -1") {
  const Presentation p = Presentation::from_text(support::kDunfield);
  SymmetryOptions options;
  options.boundary_components = 2;
  const SymmetryReport report = check_conjecture(p, options);
  int within_verified = 0;
  for (const auto& c : report.checks) {
    CHECK(c.sign == -1);
    if (c.outcome == PairCheck::Outcome::Verified) {
      REQUIRE(c.certificate);
      CHECK(validate_certificate(c.lhs, c.rhs, *c.certificate, p.relator()));
      if (c.reading == SymmetryReading::WithinRx) ++within_verified;
    }
  }
  CHECK(within_verified == 4);
}

TEST_CASE("unset boundary count tries both signs") {
  const Presentation p = Presentation::from_text(support::kDunfield);
  SymmetryOptions options;
  options.depth = 0;
  const SymmetryReport report = check_conjecture(p, options);
  std::set<int> signs;
  for (const auto& c : report.checks) signs.insert(c.sign);
  CHECK(signs == std::set<int>{-1, 1});
}
