#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "shiftlab/budget.hpp"
#include "shiftlab/core.hpp"
#include "shiftlab/spec.hpp"

namespace shiftlab {

/// Outcome of a budgeted witness search. `verified` certifies at least
/// `threshold` distinct extension symbols; the alternative is only
/// "not verified up to this budget", never a refutation. Each witness pair
/// (a, y) re-verifies independently through in_inf on the assembled point.
struct WitnessVerdict {
  bool verified = false;
  std::vector<std::pair<Symbol, Point>> witnesses;        // ascending by symbol
  std::vector<std::pair<std::size_t, std::size_t>> counts_at;  // (truncation, count)

  std::size_t count() const { return witnesses.size(); }
  std::optional<std::size_t> count_at(std::size_t truncation) const;
};

/// Searches for infinite continuations of a finite prefix inside one spec,
/// over the truncated alphabet {0..n-1} and lasso periods <= period_bound.
///
/// The search walks the follower graph whose nodes are allowed
/// (reach-1)-blocks; an eventually periodic continuation within the bounds
/// exists iff the prefix state reaches a node on a directed cycle of length
/// <= period_bound, and the search is complete in that sense. Results are
/// deterministic: shortest path first, smallest symbols first.
///
/// Instances memoize graph facts and are cheap to reuse across many queries
/// with the same (spec, budget); a single instance is not safe to share
/// across threads.
class ContinuationSearcher {
 public:
  ContinuationSearcher(ShiftSpec spec, std::size_t truncation, std::size_t period_bound);

  /// y over {0..n-1}, eventually periodic with period <= period_bound, such
  /// that prefix·y lies in X^inf; nullopt when none exists within bounds.
  std::optional<Point> continuation(const Word& prefix) const;

  const ShiftSpec& spec() const { return spec_; }
  std::size_t truncation() const { return truncation_; }
  std::size_t period_bound() const { return period_bound_; }

 private:
  const std::optional<Word>& small_cycle(const Word& state) const;

  ShiftSpec spec_;
  std::size_t truncation_;
  std::size_t period_bound_;
  std::size_t state_len_;

  mutable std::map<Word, std::optional<Word>> cycle_memo_;
  mutable std::set<Word> dead_;
};

/// For every symbol a < truncation, seeks an infinite continuation y with
/// x·a·y in X^inf. Complete relative to the budget: every symbol admitting
/// such a continuation within the bounds is listed. `counts_at` records the
/// count at the full truncation.
WitnessVerdict extension_witnesses(const ShiftSpec& spec, const Word& x,
                                   const SearchBudget& budget);

/// The infinite-extension test for a finite word: verified when at least
/// `threshold` distinct symbols extend. Counts are recorded at truncations
/// n/2 and n so stabilization is visible.
WitnessVerdict in_fin(const ShiftSpec& spec, const Word& x, const SearchBudget& budget);

/// Exact bool for infinite points, witness verdict for finite ones.
using MembershipResult = std::variant<bool, WitnessVerdict>;
MembershipResult membership(const ShiftSpec& spec, const Point& p, const SearchBudget& budget);

/// All allowed words of length <= max_len over {0..n-1}, in length-major
/// (then lexicographic) order, the empty word included.
std::vector<Word> language_up_to(const ShiftSpec& spec, std::size_t max_len,
                                 const SearchBudget& budget);

struct SpectrumRow {
  std::size_t length = 0;
  bool verified = false;
  std::optional<Word> witness;  // lexicographically least verified word

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

/// For each length <= max_len, the lexicographically least word over
/// {0..n-1} whose in_fin verdict is verified, or an absent-up-to-budget row.
/// Lengths below reach-1 are scanned directly; longer lengths are decided
/// exactly (relative to the budget) on the dense follower graph.
std::vector<SpectrumRow> length_spectrum(const ShiftSpec& spec, std::size_t max_len,
                                         const SearchBudget& budget);

/// The exact list, within the truncated alphabet, of infinite points fixed
/// by the q-fold shift that lie in X^inf, ordered canonically.
std::vector<Point> periodic_points(const ShiftSpec& spec, std::size_t period,
                                   const SearchBudget& budget);

}  // namespace shiftlab
