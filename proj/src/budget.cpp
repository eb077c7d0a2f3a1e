#include "shiftlab/budget.hpp"

#include <stdexcept>

namespace shiftlab {

void SearchBudget::validate() const {
  if (truncation < 1) throw std::invalid_argument("budget: truncation must be >= 1");
  if (threshold < 2) throw std::invalid_argument("budget: threshold must be >= 2");
  if (period_bound < 1) throw std::invalid_argument("budget: period bound must be >= 1");
  if (depth < 1) throw std::invalid_argument("budget: depth must be >= 1");
}

SearchBudget SearchBudget::with_truncation(std::size_t n) const {
  SearchBudget b = *this;
  b.truncation = n;
  return b;
}

SearchBudget SearchBudget::with_period_bound(std::size_t p) const {
  SearchBudget b = *this;
  b.period_bound = p;
  return b;
}

}  // namespace shiftlab
