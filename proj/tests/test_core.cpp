#include "doctest.h"
#include "oracles.hpp"
#include "shiftlab/core.hpp"

#include <stdexcept>

using namespace shiftlab;

TEST_CASE("length of points") {
  CHECK(Point::empty().length() == 0);
  CHECK(Point::finite({0, 5}).length() == 2);
  CHECK(Point::eventually_periodic({}, {0, 1}).length() == kInfinity);
  CHECK(length(Point::finite({7})) == 1);
}

TEST_CASE("shift map on the three variants") {
  CHECK(shift(Point::empty()) == Point::empty());
  CHECK(shift(Point::finite({7})) == Point::empty());
  CHECK(shift(Point::finite({0, 5})) == Point::finite({5}));

  const Point p = Point::eventually_periodic({}, {0, 1});
  const Point shifted = shift(p);
  CHECK(shifted == Point::eventually_periodic({}, {1, 0}));
  // symbol-wise check against the unrolled description
  const Word expected = oracles::unroll({}, {0, 1}, 5);
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(shifted.at(i) == expected[i]);  // expected is 0-based, shifted by one
  }
}

TEST_CASE("shift drops the preperiod first") {
  const Point p = Point::eventually_periodic({3, 4}, {5});
  CHECK(shift(p) == Point::eventually_periodic({4}, {5}));
  CHECK(shift(shift(p)) == Point::eventually_periodic({}, {5}));
  CHECK(shift(shift(shift(p))) == Point::eventually_periodic({}, {5}));
}

TEST_CASE("canonicalize examples") {
  CHECK(canonicalize({0}, {0, 0}) == Point::eventually_periodic({}, {0}));

  const Point p = canonicalize({0, 1}, {0, 1, 0, 1});
  CHECK(p == Point::eventually_periodic({}, {0, 1}));
  const Word expected = oracles::unroll({0, 1}, {0, 1, 0, 1}, 8);
  for (std::size_t i = 1; i <= 8; ++i) CHECK(p.at(i) == expected[i - 1]);

  const Point q = canonicalize({1}, {0});
  CHECK(q.preperiod() == Word{1});
  CHECK(q.period() == Word{0});
}

TEST_CASE("canonicalize rejects an empty period") {
  CHECK_THROWS_AS(canonicalize({0}, {}), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent and respects sequence equality") {
  // exhaustive over pre <= 2, per <= 2, symbols < 2
  std::vector<std::pair<Word, Word>> descriptions;
  for (std::size_t a = 0; a <= 2; ++a) {
    for (const Word& pre : oracles::all_words(a, 2)) {
      for (std::size_t q = 1; q <= 2; ++q) {
        for (const Word& per : oracles::all_words(q, 2)) descriptions.emplace_back(pre, per);
      }
    }
  }
  std::vector<Point> points;
  for (const auto& [pre, per] : descriptions) points.push_back(canonicalize(pre, per));
  for (const auto& p : points) {
    CHECK(canonicalize(p.preperiod(), p.period()) == p);
  }
  for (std::size_t i = 0; i < descriptions.size(); ++i) {
    for (std::size_t j = i; j < descriptions.size(); ++j) {
      const bool same = oracles::same_sequence(descriptions[i].first, descriptions[i].second,
                                               descriptions[j].first, descriptions[j].second);
      CHECK((points[i] == points[j]) == same);
    }
  }
}

TEST_CASE("symbol_at") {
  CHECK(symbol_at(Point::finite({0, 5}), 2) == 5);
  CHECK(symbol_at(Point::finite({0, 5}), 3) == std::nullopt);
  CHECK(symbol_at(Point::eventually_periodic({1}, {0}), 4) == 0);
  CHECK_THROWS_AS(symbol_at(Point::empty(), 0), std::invalid_argument);
}

TEST_CASE("windows examples") {
  CHECK(windows(Point::eventually_periodic({}, {0, 5}), 2) ==
        std::set<Word>{{0, 5}, {5, 0}});
  CHECK(windows(Point::finite({0, 1}), 3).empty());
  CHECK(windows(Point::eventually_periodic({}, {7}), 3) == std::set<Word>{{7, 7, 7}});
  CHECK_THROWS_AS(windows(Point::empty(), 0), std::invalid_argument);
}

TEST_CASE("windows of a lasso match the brute-force window set of a deep unrolling") {
  // exhaustive: L <= 8, pre length <= 4, period length <= 4, symbols < 4
  for (std::size_t a = 0; a <= 4; ++a) {
    for (const Word& pre : oracles::all_words(a, 4)) {
      for (std::size_t q = 1; q <= 4; ++q) {
        for (const Word& per : oracles::all_words(q, 4)) {
          const Point p = canonicalize(pre, per);
          for (std::size_t len = 1; len <= 8; ++len) {
            const Word deep = oracles::unroll(pre, per, a + 2 * q + 2 * len);
            const auto expected = oracles::brute_windows(deep, len);
            if (windows(p, len) != expected) {
              CAPTURE(format_word(pre));
              CAPTURE(format_word(per));
              CAPTURE(len);
              REQUIRE(windows(p, len) == expected);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("length interacts with shift as expected") {
  for (const auto& p : oracles::point_universe(3, 3, 2, 2)) {
    const Point s = shift(p);
    if (p.length() == kInfinity) {
      CHECK(s.length() == kInfinity);
    } else if (p.length() >= 1) {
      CHECK(s.length() == p.length() - 1);
    } else {
      CHECK(s == Point::empty());
    }
  }
}

TEST_CASE("prefix and prepend") {
  const Point p = Point::eventually_periodic({9}, {0, 1});
  CHECK(p.prefix(5) == Word{9, 0, 1, 0, 1});
  CHECK(p.prefix(0).empty());
  CHECK(Point::finite({1, 2}).prefix(8) == Word{1, 2});

  CHECK(prepend({1, 2}, Point::empty()) == Point::finite({1, 2}));
  CHECK(prepend({1}, Point::finite({2})) == Point::finite({1, 2}));
  CHECK(prepend({}, p) == p);
  // prepending can merge into the cycle: 0 (1 0)^inf = (0 1)^inf
  CHECK(prepend({0}, Point::eventually_periodic({}, {1, 0})) ==
        Point::eventually_periodic({}, {0, 1}));
}

TEST_CASE("format helpers") {
  CHECK(format_word({}) == "e");
  CHECK(format_word({0, 5}) == "0 5");
  CHECK(format_point(Point::empty()) == "e");
  CHECK(format_point(Point::eventually_periodic({9}, {0})) == "9 (0)^inf");
}
