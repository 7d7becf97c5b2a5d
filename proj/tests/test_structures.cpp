#include <doctest.h>

#include "pint/structures.hpp"

using namespace pint;

TEST_CASE("region helpers") {
  CHECK(region_in_interval(2, 5, 0) == 0);
  CHECK(region_in_interval(2, 5, 2) == 1);
  CHECK(region_in_interval(2, 5, 3) == 2);
  CHECK(region_in_interval(2, 5, 5) == 3);
  CHECK(region_in_interval(2, 5, 7) == 4);
  CHECK(region_at_point(3, 1) == 0);
  CHECK(region_at_point(3, 3) == 2);
  CHECK(region_at_point(3, 8) == 4);
}

TEST_CASE("holds on the integer order") {
  auto P = Element::point;
  auto I = Element::interval;
  // point-point
  CHECK(holds(Rel::pp4, P(1), P(2)));   // lt
  CHECK_FALSE(holds(Rel::pp4, P(2), P(2)));
  CHECK(holds(Rel::pp2, P(2), P(2)));   // eqp
  CHECK(holds(Rel::pp0, P(2), P(1)));   // gtp
  // interval-point: regions of the second argument in the first
  CHECK(holds(Rel::ip0, I(1, 3), P(0)));
  CHECK(holds(Rel::ip1, I(1, 3), P(1)));
  CHECK(holds(Rel::ip2, I(1, 3), P(2)));
  CHECK(holds(Rel::ip3, I(1, 3), P(3)));
  CHECK(holds(Rel::ip4, I(1, 3), P(4)));
  CHECK_FALSE(holds(Rel::ip2, I(1, 3), P(3)));
  // point-interval
  CHECK(holds(Rel::pi24, P(1), I(1, 3)));
  CHECK(holds(Rel::pi44, P(0), I(1, 3)));
  CHECK(holds(Rel::pi00, P(5), I(1, 3)));
  CHECK(holds(Rel::pi04, P(2), I(1, 3)));
  CHECK(holds(Rel::pi02, P(3), I(1, 3)));
  // interval-interval: Allen's relations in region form
  CHECK(holds(Rel::ii34, I(0, 1), I(1, 2)));    // meets
  CHECK(holds(Rel::ii44, I(0, 1), I(2, 3)));    // before
  CHECK(holds(Rel::ii14, I(0, 1), I(0, 2)));    // starts
  CHECK(holds(Rel::ii03, I(1, 2), I(0, 2)));    // finishes
  CHECK(holds(Rel::ii04, I(1, 2), I(0, 3)));    // during: x inside y
  CHECK(holds(Rel::ii24, I(0, 2), I(1, 3)));    // overlaps
  CHECK(holds(Rel::ii13, I(1, 2), I(1, 2)));    // eqi
  CHECK_FALSE(holds(Rel::ii04, I(0, 3), I(1, 2)));
  CHECK(holds(Rel::ii22, I(0, 3), I(1, 2)));    // inverse of during
  CHECK(holds(Rel::ii00, I(2, 3), I(0, 1)));    // inverse of before
  CHECK(holds(Rel::ii01, I(1, 2), I(0, 1)));    // inverse of meets
  CHECK(holds(Rel::ii12, I(0, 2), I(0, 1)));    // inverse of starts
  CHECK(holds(Rel::ii23, I(0, 2), I(1, 2)));    // inverse of finishes
  CHECK(holds(Rel::ii02, I(1, 3), I(0, 2)));    // inverse of overlaps
}

TEST_CASE("holds agrees with inverse symmetry") {
  auto I = Element::interval;
  auto P = Element::point;
  std::vector<Element> ivs, pts;
  for (int l = 0; l < 4; ++l) {
    pts.push_back(P(l));
    for (int r = l + 1; r < 4; ++r) ivs.push_back(I(l, r));
  }
  auto pick = [&](Sort s) { return s == Sort::Point ? pts : ivs; };
  for (int i = 0; i < kRelCount; ++i) {
    Rel r = Rel(i);
    for (const Element& x : pick(left_sort(r)))
      for (const Element& y : pick(right_sort(r)))
        CHECK(holds(r, x, y) == holds(inverse(r), y, x));
  }
}

TEST_CASE("holds rejects ill-sorted arguments") {
  CHECK_THROWS_AS(holds(Rel::pp4, Element::interval(0, 1), Element::point(0)),
                  SortError);
  CHECK_THROWS_AS(holds(Rel::ip2, Element::point(0), Element::point(1)),
                  SortError);
  CHECK_THROWS_AS(holds(Rel::ii44, Element::interval(0, 1), Element::point(2)),
                  SortError);
}

TEST_CASE("finite chain carriers") {
  FiniteChain c{4};
  CHECK(c.points().size() == 4);
  CHECK(c.intervals().size() == 6);  // pairs l < r from {0,1,2,3}
  CHECK(c.elements(Sort::Point).size() == 4);
  CHECK(c.elements(Sort::Interval).size() == 6);
  CHECK(c.contains(Element::point(3)));
  CHECK_FALSE(c.contains(Element::point(4)));
  CHECK(c.contains(Element::interval(0, 3)));
  CHECK_FALSE(c.contains(Element::interval(3, 3)));
  CHECK_FALSE(c.contains(Element::interval(0, 4)));

  FiniteChain tiny{1};
  CHECK(tiny.points().size() == 1);
  CHECK(tiny.intervals().empty());
  FiniteChain zero{0};
  CHECK(zero.points().empty());
  CHECK(zero.intervals().empty());
}

TEST_CASE("chain dual reverses the order") {
  FiniteChain c{5};
  CHECK(c.dual(Element::point(0)) == Element::point(4));
  CHECK(c.dual(Element::point(2)) == Element::point(2));
  CHECK(c.dual(Element::interval(0, 1)) == Element::interval(3, 4));
  CHECK(c.dual(Element::interval(1, 3)) == Element::interval(1, 3));
  // dual is an involution and preserves membership
  for (const Element& e : c.points()) {
    CHECK(c.contains(c.dual(e)));
    CHECK(c.dual(c.dual(e)) == e);
  }
  for (const Element& e : c.intervals()) {
    CHECK(c.contains(c.dual(e)));
    CHECK(c.dual(c.dual(e)) == e);
  }
}

TEST_CASE("element rendering") {
  CHECK(Element::point(7).to_string() == "7");
  CHECK(Element::interval(1, 3).to_string() == "[1,3]");
}
