#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <variant>

#include "shiftlab/core.hpp"

namespace shiftlab {

/// A total 0/1-valued function on windows A^w over the infinite alphabet,
/// finitely described. A Step shift space with window w is the set of
/// sequences all of whose length-w subblocks evaluate to 1 (an (w-1)-step
/// shift in the forbidden-block sense).
class WindowPredicate {
 public:
  /// 1 iff the first and last symbols of the window agree.
  struct FirstEqualsLast {
    friend bool operator==(const FirstEqualsLast&, const FirstEqualsLast&) = default;
  };

  /// Window 2 only. 1 iff the first symbol is x0 (everything may follow x0)
  /// or the second symbol repeats the first; 0 otherwise. x0 is the single
  /// symbol with infinitely many followers.
  struct ZeroStepExample {
    Symbol x0 = 0;
    friend bool operator==(const ZeroStepExample&, const ZeroStepExample&) = default;
  };

  /// Explicit table over the support alphabet {0..support-1}. Windows that
  /// touch a symbol >= support, and windows missing from the table, take the
  /// fallback bit, which keeps the predicate total and finitely described.
  struct Table {
    std::size_t support = 0;
    std::map<Word, int> entries;
    int fallback = 0;
    friend bool operator==(const Table&, const Table&) = default;
  };

  using Rule = std::variant<FirstEqualsLast, ZeroStepExample, Table>;

  /// Throws std::invalid_argument on window < 2, a ZeroStepExample rule with
  /// window != 2, or malformed table entries.
  WindowPredicate(std::size_t window, Rule rule);

  std::size_t window() const { return window_; }
  const Rule& rule() const { return rule_; }

  int value(std::span<const Symbol> window_symbols) const;

  friend bool operator==(const WindowPredicate&, const WindowPredicate&) = default;

 private:
  std::size_t window_ = 2;
  Rule rule_;
};

}  // namespace shiftlab
