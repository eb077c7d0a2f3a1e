#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlab/budget.hpp"
#include "shiftlab/convergence.hpp"
#include "shiftlab/core.hpp"
#include "shiftlab/predicate.hpp"
#include "shiftlab/search.hpp"
#include "shiftlab/spec.hpp"

namespace shiftlab {

/// The window-(M+2) predicate that accepts a window iff its first and last
/// symbols agree. Step(theorem_predicate(M)) is an (M+1)-step shift whose
/// finite elements stop at length M. Throws std::invalid_argument on M = 0.
WindowPredicate theorem_predicate(std::size_t m);

/// The window-2 predicate for the 0-step separation: after x0 anything may
/// follow; any other symbol may only repeat itself.
WindowPredicate zero_step_predicate(Symbol x0);

/// Evidence for the first obstruction condition: a base word x_1..x_M with
/// at least `threshold` symbols s whose (M+1)-periodic closure (base·s)^inf
/// passes every cyclic window of length M+2.
struct ConditionOneWitness {
  Word base;
  std::vector<Symbol> witnesses;       // ascending
  std::size_t checked_equalities = 0;  // cyclic window evaluations per witness
};

/// Scans bases of length M in lexicographic order over the truncated
/// alphabet; returns the first base reaching the witness threshold, or
/// nullopt when none qualifies within budget (not a refutation).
/// Throws std::invalid_argument when the predicate window is not M+2.
std::optional<ConditionOneWitness> check_condition_one(const WindowPredicate& predicate,
                                                       std::size_t m,
                                                       const SearchBudget& budget);

/// Extension counts for one sampled (M+1)-word at two truncations; equality
/// of the two counts is evidence of finiteness (STABLE), growth is not.
struct ConditionTwoSample {
  Word sample;
  std::vector<std::pair<std::size_t, std::size_t>> counts_at;
  bool stable = false;
};

struct ConditionTwoReport {
  std::vector<ConditionTwoSample> samples;
  /// For the first-equals-last rule the count is exactly 1 at every
  /// truncation past the first symbol, so stability is analytic, not
  /// sampled.
  bool analytic_single = false;
  bool all_stable = false;
};

ConditionTwoReport check_condition_two(const WindowPredicate& predicate, std::size_t m,
                                       const SearchBudget& budget,
                                       const std::vector<Word>& samples);

/// j -> (base · s_j)^inf for j = 1..count with the fresh-symbol schedule
/// s_j = max(base) + j, so the extension symbols are pairwise distinct. Each
/// member is (M+1)-periodic and the family converges to the finite word
/// `base`. Throws std::invalid_argument unless base has length m >= 1.
std::vector<Point> xi_family(std::size_t m, const Word& base, std::size_t count);

/// The point y·s0 followed by `tail`. The tail must be infinite and fixed by
/// the (|y|+1)-fold shift; the first 2|y|+1 symbols of the result spell
/// y·s0·y. Throws std::invalid_argument otherwise.
Point z_point(const Word& y, Symbol s0, const Point& tail);

/// Replay of the gluing step: inside an M-step spec (window M+1) containing
/// the family (y·s_k)^inf, the points z_k = y·s0·(y·s_k)^inf stay in X^inf
/// and converge to the length-(2M+1) word y·s0·y.
struct ZLemmaReport {
  Word y;
  Symbol s0 = 0;
  std::size_t count = 0;
  std::vector<Point> family;               // (y·s_k)^inf
  std::vector<Point> z_points;             // z_k
  std::vector<std::size_t> family_failures;  // 1-based k with family[k] not in X^inf
  std::vector<std::size_t> z_failures;       // 1-based k with z_k not in X^inf
  Word limit_word;                         // y·s0·y
  ConvergenceProfile convergence;          // z-family -> limit_word
  WitnessVerdict limit_verdict;            // in_fin of the limit word
  bool passed = false;
};

/// Throws std::invalid_argument unless spec is a Step spec with window
/// |y|+1.
ZLemmaReport z_lemma_check(const ShiftSpec& spec, const Word& y, Symbol s0, std::size_t count,
                           const SearchBudget& budget);

/// The assembled mechanical evidence that Step(theorem_predicate(M)) is an
/// (M+1)-step shift not conjugate to any M-step shift: condition (1)
/// witnesses, condition (2) stability, a spectrum verified at lengths 0..M
/// and absent at M+1..2M+1, and the xi-family convergence certificate.
struct ObstructionReport {
  std::size_t m = 0;
  SearchBudget budget;
  std::optional<ConditionOneWitness> condition1;
  ConditionTwoReport condition2;
  std::vector<SpectrumRow> spectrum;  // lengths 0..2M+1
  std::vector<Point> xi_points;
  ConvergenceProfile xi_convergence;
  bool condition1_ok = false;
  bool condition2_ok = false;
  bool spectrum_ok = false;
  bool xi_ok = false;
  std::string conclusion;

  bool passed() const { return condition1_ok && condition2_ok && spectrum_ok && xi_ok; }
};

ObstructionReport obstruction_report(std::size_t m, const SearchBudget& budget);

/// Per-symbol evidence for the 0-step separation.
struct ZeroStepRow {
  Symbol x = 0;
  Symbol follower = 0;          // least y with predicate(x, y) = 1
  Point infinite_witness;       // an infinite point starting with x
  bool witness_in_inf = false;
  std::size_t length1_count = 0;  // in_fin witness count for the word "x"
  bool length1_verified = false;
};

struct ZeroStepReport {
  Symbol x0 = 0;
  SearchBudget budget;
  std::vector<ZeroStepRow> rows;
  std::vector<Symbol> verified_length1;    // expected: exactly {x0}
  std::size_t full_shift_verified_count = 0;  // expected: truncation
  bool condition_i_ok = false;
  bool slice_ok = false;
  bool comparison_ok = false;
  std::string conclusion;

  bool passed() const { return condition_i_ok && slice_ok && comparison_ok; }
};

ZeroStepReport zero_step_report(Symbol x0, const SearchBudget& budget);

}  // namespace shiftlab
