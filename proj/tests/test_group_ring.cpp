#include "doctest.h"

#include "foxnorm/fox.hpp"
#include "support.hpp"

using namespace foxnorm;

namespace {

RingElt elt(std::string_view text) { return RingElt::parse(text); }

RingElt group_minus_one(Generator g) {
  return RingElt::monomial(Word::power(g, 1)) - RingElt::one();
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  CHECK((elt("1 - xyX") * elt("x")) == elt("x - xy"));
  CHECK((elt("x") + elt("-x")).is_zero());
  CHECK(elt("2xy - X + 3").coefficient(parse_word("xy")) == 2);
  CHECK(elt("xX + 1") == elt("2"));
  CHECK(elt("x - 1").to_string() == "-1 + x");
  CHECK(involution(elt("x + 2xy")) == elt("X + 2YX"));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const RingElt a = support::random_ring_elt(rng, 4, 5);
    const RingElt b = support::random_ring_elt(rng, 4, 5);
    const RingElt c = support::random_ring_elt(rng, 3, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
    CHECK(RingElt::one() * a == a);
    CHECK(involution(a * b) == involution(b) * involution(a));
    CHECK(involution(involution(a)) == a);
  }
}

TEST_CASE("monomials and group translates") {
  CHECK(is_monomial(elt("-xy")));
  CHECK_FALSE(is_monomial(elt("x + y")));
  CHECK_FALSE(is_monomial(RingElt{}));
  const RingElt f = elt("1 + xy");
  CHECK(left_multiply(parse_word("X"), f) == elt("X + y"));
  CHECK(right_multiply(f, parse_word("Y")) == elt("Y + x"));
}

TEST_CASE("Fox derivative examples") {
  CHECK(fox_derivative(parse_word("xyXY"), Generator::x) == elt("1 - xyX"));
  CHECK(fox_derivative(parse_word("xyXY"), Generator::y) == elt("x - xyXY"));
  CHECK(fox_derivative(parse_word("x^3"), Generator::x) == elt("1 + x + xx"));
  CHECK(fox_derivative(parse_word("X"), Generator::x) == elt("-X"));
  CHECK(fox_derivative(parse_word("y"), Generator::x).is_zero());
}

TEST_CASE("Fox fundamental identity and product rule") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const Word u = support::random_reduced_word(rng, rng() % 30);
    const Word v = support::random_reduced_word(rng, rng() % 30);
    const RingElt lhs = fox_derivative(u, Generator::x) * group_minus_one(Generator::x) +
                        fox_derivative(u, Generator::y) * group_minus_one(Generator::y);
    CHECK(lhs == RingElt::monomial(u) - RingElt::one());
    for (Generator g : {Generator::x, Generator::y}) {
      CHECK(fox_derivative(u * v, g) == fox_derivative(u, g) + left_multiply(u, fox_derivative(v, g)));
    }
  }
}

TEST_CASE("Fox summands of a reduced word are distinct") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Word w = support::random_reduced_word(rng, rng() % 40);
    for (Generator g : {Generator::x, Generator::y}) {
      const auto summands = fox_summands(w, g);
      const RingElt d = fox_derivative(w, g);
      CHECK(d.size() == summands.size());
      for (const auto& s : summands) CHECK(d.coefficient(s.prefix) == s.sign);
    }
  }
}

TEST_CASE("Dunfield r_x components at the four vertices") {
  const Presentation p = Presentation::from_text(support::kDunfield);
  const AbelianizationMap map = psi(p);
  const RingElt r_x = fox_derivative(p.relator(), Generator::x);
  const RingElt v1 = component(r_x, {0, 1}, map);
  CHECK(v1 == elt("-x^2yx^-1yx^2yx^-1y^-3x^-1yx^2yx^-1yxy^-1x^-2y^-1xy^-1x^-2y^-1xy^3xy^-1x^-2"));
  const RingElt w1 = component(r_x, {2, 1}, map);
  CHECK(w1 == elt("x^2yx^-1yx^2yx^-1y^-3x^-1yx"));
  const Word c = parse_word("x^2yx^-1yx^2yx^-1");
  CHECK(component(r_x, {2, 3}, map) == left_multiply(c, elt("-1 + y^-3x^-1yx^2yx^-1y")));
  const Word d = parse_word("x^2yx^-1yx^2yx^-1y^-3x^-1yx^2yx^-1yxy^-1x^-2y^-1xy^-1x^-2y^-1");
  CHECK(component(r_x, {0, -1}, map) == left_multiply(d, elt("1 - xy^3xy^-1x^-2y^-1xy^-1x^-1")));
  CHECK(is_monomial(v1));
  CHECK_FALSE(is_monomial(component(r_x, {2, 3}, map)));
}
