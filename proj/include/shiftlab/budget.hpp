#pragma once

#include <cstddef>

namespace shiftlab {

/// Bounds for the semi-decidable searches. Symbols are drawn from the
/// truncated alphabet {0..truncation-1}; "infinitely many" is certified by
/// reaching `threshold` distinct witnesses; candidate infinite continuations
/// are lassos with period at most `period_bound`; `depth` is the unrolling
/// depth used by cross-checks. Enlarging any bound can only add witnesses.
struct SearchBudget {
  std::size_t truncation = 16;
  std::size_t threshold = 8;
  std::size_t period_bound = 8;
  std::size_t depth = 64;

  /// Throws std::invalid_argument when a bound is below its minimum
  /// (truncation, period_bound, depth >= 1; threshold >= 2).
  void validate() const;

  SearchBudget with_truncation(std::size_t n) const;
  SearchBudget with_period_bound(std::size_t p) const;

  friend bool operator==(const SearchBudget&, const SearchBudget&) = default;
};

}  // namespace shiftlab
