#include "shiftlab/counterexamples.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <stdexcept>

namespace shiftlab {

WindowPredicate theorem_predicate(std::size_t m) {
  if (m < 1) {
    throw std::invalid_argument("theorem_predicate needs M >= 1; use zero_step_predicate for M = 0");
  }
  return WindowPredicate(m + 2, WindowPredicate::FirstEqualsLast{});
}

WindowPredicate zero_step_predicate(Symbol x0) {
  return WindowPredicate(2, WindowPredicate::ZeroStepExample{x0});
}

namespace {

// All M+2 cyclic windows of the (M+1)-periodic word (base·s)^inf evaluate
// to 1. The window at phase M+2 repeats phase 1; it is still evaluated so
// that the certificate counts one check per display row.
bool cyclic_windows_pass(const WindowPredicate& predicate, const Word& base, Symbol s) {
  const std::size_t window = predicate.window();  // M + 2
  Word block = base;
  block.push_back(s);
  Word unrolled;
  unrolled.reserve(2 * window - 1);
  while (unrolled.size() < 2 * window - 1) {
    unrolled.insert(unrolled.end(), block.begin(), block.end());
  }
  for (std::size_t start = 0; start < window; ++start) {
    if (predicate.value(std::span<const Symbol>(unrolled.data() + start, window)) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<ConditionOneWitness> check_condition_one(const WindowPredicate& predicate,
                                                       std::size_t m,
                                                       const SearchBudget& budget) {
  budget.validate();
  if (m < 1) throw std::invalid_argument("condition (1) needs M >= 1");
  if (predicate.window() != m + 2) {
    throw std::invalid_argument("condition (1) needs a predicate window of M + 2");
  }
  Word base(m, 0);
  do {
    ConditionOneWitness witness;
    witness.base = base;
    witness.checked_equalities = m + 2;
    for (Symbol s = 0; s < budget.truncation; ++s) {
      if (cyclic_windows_pass(predicate, base, s)) witness.witnesses.push_back(s);
    }
    if (witness.witnesses.size() >= budget.threshold) return witness;
  } while (next_word_lex(base, budget.truncation));
  return std::nullopt;
}

ConditionTwoReport check_condition_two(const WindowPredicate& predicate, std::size_t m,
                                       const SearchBudget& budget,
                                       const std::vector<Word>& samples) {
  budget.validate();
  if (predicate.window() != m + 2) {
    throw std::invalid_argument("condition (2) needs a predicate window of M + 2");
  }
  ConditionTwoReport report;
  report.analytic_single =
      std::holds_alternative<WindowPredicate::FirstEqualsLast>(predicate.rule());
  report.all_stable = true;
  for (const auto& sample : samples) {
    if (sample.size() != m + 1) {
      throw std::invalid_argument("condition (2) samples must have length M + 1");
    }
    ConditionTwoSample row;
    row.sample = sample;
    auto count_below = [&](std::size_t truncation) {
      std::size_t count = 0;
      Word extended = sample;
      extended.push_back(0);
      for (Symbol a = 0; a < truncation; ++a) {
        extended.back() = a;
        if (predicate.value(extended) == 1) ++count;
      }
      return count;
    };
    const std::size_t half = budget.truncation / 2;
    if (half >= 1 && half < budget.truncation) {
      row.counts_at.emplace_back(half, count_below(half));
    }
    row.counts_at.emplace_back(budget.truncation, count_below(budget.truncation));
    row.stable = true;
    for (const auto& [t, c] : row.counts_at) {
      row.stable = row.stable && c == row.counts_at.back().second;
    }
    report.all_stable = report.all_stable && row.stable;
    report.samples.push_back(std::move(row));
  }
  return report;
}

std::vector<Point> xi_family(std::size_t m, const Word& base, std::size_t count) {
  if (m < 1 || base.size() != m) {
    throw std::invalid_argument("xi family needs a base word of length M >= 1");
  }
  const Symbol top = *std::max_element(base.begin(), base.end());
  std::vector<Point> family;
  family.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    Word block = base;
    block.push_back(top + static_cast<Symbol>(j));
    family.push_back(Point::eventually_periodic({}, std::move(block)));
  }
  return family;
}

Point z_point(const Word& y, Symbol s0, const Point& tail) {
  if (!tail.is_infinite()) throw std::invalid_argument("z point needs an infinite tail");
  const std::size_t period = y.size() + 1;
  Point rotated = tail;
  for (std::size_t i = 0; i < period; ++i) rotated = rotated.shifted();
  if (rotated != tail) {
    throw std::invalid_argument("z point needs a tail fixed by the (M+1)-fold shift");
  }
  Word head = y;
  head.push_back(s0);
  return prepend(head, tail);
}

ZLemmaReport z_lemma_check(const ShiftSpec& spec, const Word& y, Symbol s0, std::size_t count,
                           const SearchBudget& budget) {
  budget.validate();
  if (y.empty()) throw std::invalid_argument("z lemma needs a nonempty base word y");
  const std::size_t m = y.size();
  if (spec.kind() != ShiftSpec::Kind::Step || spec.predicate().window() != m + 1) {
    throw std::invalid_argument("z lemma needs an M-step Step spec (window M + 1) for M = |y|");
  }
  if (count < 1) throw std::invalid_argument("z lemma needs count >= 1");

  ZLemmaReport report;
  report.y = y;
  report.s0 = s0;
  report.count = count;
  report.family = xi_family(m, y, count);
  for (std::size_t k = 1; k <= count; ++k) {
    const Point& member = report.family[k - 1];
    if (!in_inf(spec, member)) report.family_failures.push_back(k);
    Point z = z_point(y, s0, member);
    if (!in_inf(spec, z)) report.z_failures.push_back(k);
    report.z_points.push_back(std::move(z));
  }
  report.limit_word = y;
  report.limit_word.push_back(s0);
  report.limit_word.insert(report.limit_word.end(), y.begin(), y.end());
  report.convergence =
      convergence_profile(report.z_points, Point::finite(report.limit_word), count);
  report.limit_verdict = in_fin(spec, report.limit_word, budget);
  report.passed = report.family_failures.empty() && report.z_failures.empty() &&
                  report.convergence.all_passed();
  return report;
}

namespace {

std::vector<Word> condition_two_samples(std::size_t m) {
  std::vector<Word> samples;
  samples.emplace_back(m + 1, 0);
  Word alternating;
  for (std::size_t i = 0; i <= m; ++i) alternating.push_back(i % 2 == 0 ? 0 : 5);
  samples.push_back(std::move(alternating));
  Word ascending;
  for (std::size_t i = 1; i <= m + 1; ++i) ascending.push_back(static_cast<Symbol>(i));
  samples.push_back(std::move(ascending));
  return samples;
}

}  // namespace

ObstructionReport obstruction_report(std::size_t m, const SearchBudget& budget) {
  budget.validate();
  if (m < 1) throw std::invalid_argument("obstruction report needs M >= 1");
  const WindowPredicate predicate = theorem_predicate(m);
  const ShiftSpec spec = ShiftSpec::step(predicate);

  ObstructionReport report;
  report.m = m;
  report.budget = budget;

  report.condition1 = check_condition_one(predicate, m, budget);
  report.condition1_ok =
      report.condition1 && report.condition1->witnesses.size() >= budget.threshold;

  report.condition2 = check_condition_two(predicate, m, budget, condition_two_samples(m));
  report.condition2_ok = report.condition2.all_stable;

  report.spectrum = length_spectrum(spec, 2 * m + 1, budget);
  report.spectrum_ok = true;
  for (const auto& row : report.spectrum) {
    const bool expect_verified = row.length <= m;
    report.spectrum_ok = report.spectrum_ok && row.verified == expect_verified;
  }

  if (report.condition1) {
    report.xi_points = xi_family(m, report.condition1->base, 2 * budget.threshold);
    report.xi_convergence = convergence_profile(
        report.xi_points, Point::finite(report.condition1->base), budget.threshold);
    report.xi_ok = report.xi_convergence.all_passed();
  }

  std::ostringstream conclusion;
  conclusion << "spec: window-" << (m + 2)
             << " first-equals-last predicate, step count " << (m + 1) << ". ";
  if (report.condition1_ok) {
    conclusion << "condition (1) holds with " << report.condition1->witnesses.size()
               << " witnesses over base " << format_word(report.condition1->base) << "; ";
  } else {
    conclusion << "condition (1) not witnessed within budget; ";
  }
  conclusion << "condition (2) counts are "
             << (report.condition2_ok ? "stable" : "not stable")
             << (report.condition2.analytic_single
                     ? " (analytic: exactly one extension per window)"
                     : "")
             << ". ";
  bool absent_band = true;
  for (const auto& row : report.spectrum) {
    if (row.length > m) absent_band = absent_band && !row.verified;
  }
  if (absent_band) {
    conclusion << "no finite element of any length in [" << (m + 1) << ", " << (2 * m + 1)
               << "] found up to budget (truncation " << budget.truncation << ", threshold "
               << budget.threshold << "), in particular none of length " << (2 * m + 1)
               << ". ";
  } else {
    conclusion << "a finite element above length " << m << " was found; the obstruction fails. ";
  }
  if (report.passed()) {
    conclusion << "a conjugacy onto this space from an M-step shift containing the xi family "
                  "would force a finite element of length "
               << (2 * m + 1) << ", so none exists: the space is not conjugate to any " << m
               << "-step shift, within budget.";
  } else {
    conclusion << "the evidence is incomplete at this budget.";
  }
  report.conclusion = conclusion.str();
  return report;
}

ZeroStepReport zero_step_report(Symbol x0, const SearchBudget& budget) {
  budget.validate();
  const WindowPredicate predicate = zero_step_predicate(x0);
  const ShiftSpec spec = ShiftSpec::step(predicate);
  const ShiftSpec full = ShiftSpec::full_shift();

  ZeroStepReport report;
  report.x0 = x0;
  report.budget = budget;
  report.condition_i_ok = true;
  for (Symbol x = 0; x < budget.truncation; ++x) {
    ZeroStepRow row;
    row.x = x;
    bool has_follower = false;
    for (Symbol yy = 0; yy < budget.truncation; ++yy) {
      const Word window{x, yy};
      if (predicate.value(window) == 1) {
        row.follower = yy;
        has_follower = true;
        break;
      }
    }
    row.infinite_witness = x == x0 ? Point::eventually_periodic({x0}, {Symbol{0}})
                                   : Point::eventually_periodic({}, {x});
    row.witness_in_inf = in_inf(spec, row.infinite_witness);
    const WitnessVerdict verdict = in_fin(spec, {x}, budget);
    row.length1_count = verdict.count();
    row.length1_verified = verdict.verified;
    if (row.length1_verified) report.verified_length1.push_back(x);
    report.condition_i_ok = report.condition_i_ok && has_follower && row.witness_in_inf;
    report.rows.push_back(std::move(row));
  }
  report.slice_ok = report.verified_length1 == std::vector<Symbol>{x0};
  for (Symbol a = 0; a < budget.truncation; ++a) {
    if (in_fin(full, {a}, budget).verified) ++report.full_shift_verified_count;
  }
  report.comparison_ok = report.full_shift_verified_count == budget.truncation;

  std::ostringstream conclusion;
  conclusion << "window-2 predicate anchored at x0 = " << x0
             << ": every symbol below the truncation extends to an infinite point"
             << (report.condition_i_ok ? "" : " (FAILED)") << "; exactly "
             << report.verified_length1.size()
             << " length-1 element(s) verified (expected {" << x0
             << "}), against " << report.full_shift_verified_count
             << " for the full shift. ";
  if (report.passed()) {
    conclusion << "a conjugacy onto a 0-step shift (a full shift) would force infinitely many "
                  "length-1 elements, so this 1-step shift is not conjugate to any 0-step "
                  "shift, within budget.";
  } else {
    conclusion << "the evidence is incomplete at this budget.";
  }
  report.conclusion = conclusion.str();
  return report;
}

}  // namespace shiftlab
