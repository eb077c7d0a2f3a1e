#include "doctest.h"
#include "oracles.hpp"
#include "shiftlab/cylinder.hpp"

using namespace shiftlab;

TEST_CASE("cylinder membership") {
  // Z(e, {0,1,2}) is a neighborhood of the empty sequence
  CHECK(Cylinder({}, {0, 1, 2}).contains(Point::empty()));
  // second symbol lands in the forbidden set
  CHECK_FALSE(Cylinder({0}, {5}).contains(Point::eventually_periodic({}, {0, 5})));
  // constant prefix
  CHECK(Cylinder({0, 0}, {}).contains(Point::eventually_periodic({}, {0})));
}

TEST_CASE("a point ending at the base belongs vacuously; a shorter one does not") {
  CHECK(Cylinder({0, 5}, {1, 2}).contains(Point::finite({0, 5})));
  CHECK_FALSE(Cylinder({0, 5}, {}).contains(Point::finite({0})));
  CHECK_FALSE(Cylinder({0}, {}).contains(Point::empty()));
}

TEST_CASE("plain cylinders are exactly the prefix sets") {
  for (const auto& p : oracles::point_universe(3, 3, 1, 2)) {
    for (std::size_t len = 0; len <= 3; ++len) {
      for (const Word& base : oracles::all_words(len, 3)) {
        const bool expected = is_prefix(base, p.prefix(base.size()))
                              && p.length() >= base.size();
        CHECK(Cylinder(base, {}).contains(p) == expected);
      }
    }
  }
}

TEST_CASE("intersection examples") {
  CHECK_FALSE(cylinders_intersect(Cylinder({0}, {}), Cylinder({1}, {})));
  CHECK_FALSE(cylinders_intersect(Cylinder({}, {0}), Cylinder({0}, {})));
  CHECK(cylinders_intersect(Cylinder({0}, {1}), Cylinder({0, 2}, {})));
  // symmetric
  CHECK(cylinders_intersect(Cylinder({0, 2}, {}), Cylinder({0}, {1})));
  // equal bases always meet over an infinite alphabet
  CHECK(cylinders_intersect(Cylinder({3}, {0, 1}), Cylinder({3}, {2, 4})));
}

TEST_CASE("intersection agrees with joint containment over a small point universe") {
  // bases of length <= 2 over {0,1}, forbidden sets within {0,1}; the
  // universe over symbols < 3 contains a witness whenever one exists.
  const auto points = oracles::point_universe(3, 3, 1, 2);
  std::vector<Cylinder> cylinders;
  for (std::size_t len = 0; len <= 2; ++len) {
    for (const Word& base : oracles::all_words(len, 2)) {
      for (unsigned mask = 0; mask < 4; ++mask) {
        std::vector<Symbol> forbidden;
        for (Symbol s = 0; s < 2; ++s) {
          if (mask & (1u << s)) forbidden.push_back(s);
        }
        cylinders.emplace_back(base, forbidden);
      }
    }
  }
  for (const auto& a : cylinders) {
    for (const auto& b : cylinders) {
      bool joint = false;
      for (const auto& p : points) {
        if (a.contains(p) && b.contains(p)) {
          joint = true;
          break;
        }
      }
      CHECK(cylinders_intersect(a, b) == joint);
    }
  }
}

TEST_CASE("forbidden symbols are normalized") {
  const Cylinder c({0}, {2, 1, 2, 1});
  CHECK(c.forbidden == std::vector<Symbol>{1, 2});
}
