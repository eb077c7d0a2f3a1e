#include "doctest.h"
#include "oracles.hpp"
#include "shiftlab/budget.hpp"
#include "shiftlab/spec.hpp"

#include <stdexcept>

using namespace shiftlab;

namespace {

WindowPredicate fel(std::size_t window) {
  return WindowPredicate(window, WindowPredicate::FirstEqualsLast{});
}

}  // namespace

TEST_CASE("induced map on finite words") {
  const WindowPredicate pred = fel(3);
  CHECK(induced_value(pred, {0, 1}) == 1);  // shorter than the window
  CHECK(induced_value(pred, {0, 1, 0}) == 1);
  CHECK(induced_value(pred, {0, 1, 1, 0}) == 0);  // both windows fail
  CHECK(induced_value(pred, {}) == 1);
}

TEST_CASE("reach of the three spec kinds") {
  CHECK(ShiftSpec::step(fel(3)).reach() == 3);
  CHECK(ShiftSpec::forbidden({{0, 1}, {2}}).reach() == 2);
  CHECK(ShiftSpec::full_shift().reach() == 1);
}

TEST_CASE("allowed words") {
  const ShiftSpec step = ShiftSpec::step(fel(3));
  CHECK_FALSE(allowed(step, {0, 1, 1}));
  CHECK(allowed(step, {0, 1}));
  CHECK(allowed(ShiftSpec::full_shift(), {4, 4, 4, 4}));
  const ShiftSpec forb = ShiftSpec::forbidden({{0, 0}, {2}});
  CHECK(allowed(forb, {0, 1, 0}));
  CHECK_FALSE(allowed(forb, {1, 0, 0}));
  CHECK_FALSE(allowed(forb, {1, 2, 1}));
  CHECK(allowed(forb, {}));
}

TEST_CASE("spec construction validation") {
  CHECK_THROWS_AS(ShiftSpec::forbidden({}), std::invalid_argument);
  CHECK_THROWS_AS(ShiftSpec::forbidden({{}}), std::invalid_argument);
  CHECK_THROWS_AS(WindowPredicate(1, WindowPredicate::FirstEqualsLast{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WindowPredicate(3, WindowPredicate::ZeroStepExample{0}),
                  std::invalid_argument);
}

TEST_CASE("membership of infinite points") {
  const ShiftSpec step = ShiftSpec::step(fel(3));
  CHECK(in_inf(step, Point::eventually_periodic({}, {0, 5})));
  CHECK_FALSE(in_inf(step, Point::eventually_periodic({}, {0, 1, 1})));
  CHECK(in_inf(ShiftSpec::full_shift(), Point::eventually_periodic({}, {7})));
  CHECK_THROWS_AS(in_inf(step, Point::finite({0, 5})), std::invalid_argument);
  CHECK_THROWS_AS(in_inf(step, Point::empty()), std::invalid_argument);
}

TEST_CASE("in_inf agrees with deep-prefix scanning on a small corpus") {
  std::vector<ShiftSpec> specs;
  specs.push_back(ShiftSpec::full_shift());
  for (std::size_t w = 2; w <= 4; ++w) specs.push_back(ShiftSpec::step(fel(w)));
  specs.push_back(ShiftSpec::step(WindowPredicate(2, WindowPredicate::ZeroStepExample{0})));
  specs.push_back(ShiftSpec::step(WindowPredicate(2, WindowPredicate::ZeroStepExample{1})));
  WindowPredicate::Table table;
  table.support = 2;
  table.entries[{0, 0}] = 1;
  table.entries[{1, 1}] = 1;
  table.fallback = 0;
  specs.push_back(ShiftSpec::step(WindowPredicate(2, table)));
  table.fallback = 1;
  specs.push_back(ShiftSpec::step(WindowPredicate(2, table)));
  specs.push_back(ShiftSpec::forbidden({{0, 0}}));
  specs.push_back(ShiftSpec::forbidden({{1}, {0, 2, 0}}));
  specs.push_back(ShiftSpec::forbidden({{0, 1, 0, 1}}));

  const std::size_t depth = SearchBudget{}.depth;  // the cross-check depth, 64
  for (std::size_t a = 0; a <= 3; ++a) {
    for (const Word& pre : oracles::all_words(a, 3)) {
      for (std::size_t q = 1; q <= 3; ++q) {
        for (const Word& per : oracles::all_words(q, 3)) {
          const Point p = canonicalize(pre, per);
          for (const auto& spec : specs) {
            const bool via_prefix = allowed(spec, p.prefix(depth));
            CHECK(in_inf(spec, p) == via_prefix);
          }
        }
      }
    }
  }
}

TEST_CASE("table predicates are total through the fallback bit") {
  WindowPredicate::Table table;
  table.support = 2;
  table.entries[{0, 1}] = 0;
  table.fallback = 1;
  const WindowPredicate pred(2, table);
  CHECK(pred.value(Word{0, 1}) == 0);
  CHECK(pred.value(Word{1, 0}) == 1);   // missing entry -> fallback
  CHECK(pred.value(Word{0, 9}) == 1);   // symbol beyond the support -> fallback
}

TEST_CASE("table validation") {
  WindowPredicate::Table bad_len;
  bad_len.support = 2;
  bad_len.entries[{0}] = 1;
  CHECK_THROWS_AS(WindowPredicate(2, bad_len), std::invalid_argument);
  WindowPredicate::Table bad_symbol;
  bad_symbol.support = 2;
  bad_symbol.entries[{0, 5}] = 1;
  CHECK_THROWS_AS(WindowPredicate(2, bad_symbol), std::invalid_argument);
  WindowPredicate::Table bad_bit;
  bad_bit.support = 2;
  bad_bit.entries[{0, 0}] = 2;
  CHECK_THROWS_AS(WindowPredicate(2, bad_bit), std::invalid_argument);
}

TEST_CASE("symbol permutations") {
  CHECK_THROWS_AS(SymbolPermutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(SymbolPermutation({1, 2}), std::invalid_argument);
  const SymbolPermutation swap01({1, 0});
  CHECK(swap01.apply(0) == 1);
  CHECK(swap01.apply(7) == 7);
  CHECK(swap01.invert(1) == 0);
}

TEST_CASE("permuting specs") {
  const ShiftSpec forb = ShiftSpec::forbidden({{0, 1}});
  CHECK(permute_symbols(forb, SymbolPermutation::identity()) == forb);
  CHECK(permute_symbols(forb, SymbolPermutation({1, 0})) ==
        ShiftSpec::forbidden({{1, 0}}));

  const ShiftSpec zse =
      ShiftSpec::step(WindowPredicate(2, WindowPredicate::ZeroStepExample{0}));
  CHECK(permute_symbols(zse, SymbolPermutation({1, 0})) ==
        ShiftSpec::step(WindowPredicate(2, WindowPredicate::ZeroStepExample{1})));

  const ShiftSpec fel3 = ShiftSpec::step(fel(3));
  CHECK(permute_symbols(fel3, SymbolPermutation({2, 0, 1})) == fel3);
}

TEST_CASE("permuted tables relabel their semantics exactly") {
  WindowPredicate::Table table;
  table.support = 2;
  table.entries[{0, 1}] = 1;
  table.entries[{1, 1}] = 1;
  table.fallback = 0;
  const ShiftSpec spec = ShiftSpec::step(WindowPredicate(2, table));
  // swap 1 <-> 4: the permuted support must grow to keep old entries exact
  const SymbolPermutation perm({0, 4, 2, 3, 1});
  const ShiftSpec mapped = permute_symbols(spec, perm);
  const auto& mapped_pred = mapped.predicate();
  for (Symbol x = 0; x < 6; ++x) {
    for (Symbol y = 0; y < 6; ++y) {
      const Word image{perm.apply(x), perm.apply(y)};
      CHECK(mapped_pred.value(image) == spec.predicate().value(Word{x, y}));
    }
  }
}
