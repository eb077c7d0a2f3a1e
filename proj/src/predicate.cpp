#include "shiftlab/predicate.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftlab {

WindowPredicate::WindowPredicate(std::size_t window, Rule rule)
    : window_(window), rule_(std::move(rule)) {
  if (window_ < 2) throw std::invalid_argument("window predicate needs window >= 2");
  if (std::holds_alternative<ZeroStepExample>(rule_) && window_ != 2) {
    throw std::invalid_argument("zero-step example rule is defined on windows of length 2");
  }
  if (const auto* table = std::get_if<Table>(&rule_)) {
    if (table->fallback != 0 && table->fallback != 1) {
      throw std::invalid_argument("table fallback must be 0 or 1");
    }
    for (const auto& [key, bit] : table->entries) {
      if (key.size() != window_) throw std::invalid_argument("table entry window has wrong length");
      if (bit != 0 && bit != 1) throw std::invalid_argument("table entry value must be 0 or 1");
      if (std::any_of(key.begin(), key.end(),
                      [&](Symbol s) { return static_cast<std::size_t>(s) >= table->support; })) {
        throw std::invalid_argument("table entry uses a symbol outside the declared support");
      }
    }
  }
}

int WindowPredicate::value(std::span<const Symbol> w) const {
  if (w.size() != window_) throw std::invalid_argument("window has wrong length for predicate");
  if (std::holds_alternative<FirstEqualsLast>(rule_)) {
    return w.front() == w.back() ? 1 : 0;
  }
  if (const auto* zse = std::get_if<ZeroStepExample>(&rule_)) {
    if (w[0] == zse->x0) return 1;
    return w[1] == w[0] ? 1 : 0;
  }
  const auto& table = std::get<Table>(rule_);
  const bool inside = std::all_of(w.begin(), w.end(), [&](Symbol s) {
    return static_cast<std::size_t>(s) < table.support;
  });
  if (!inside) return table.fallback;
  const auto it = table.entries.find(Word(w.begin(), w.end()));
  return it == table.entries.end() ? table.fallback : it->second;
}

}  // namespace shiftlab
