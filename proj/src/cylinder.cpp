#include "shiftlab/cylinder.hpp"

#include <algorithm>

namespace shiftlab {

Cylinder::Cylinder(Word base_word, std::vector<Symbol> forbidden_symbols)
    : base(std::move(base_word)), forbidden(std::move(forbidden_symbols)) {
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
}

bool Cylinder::contains(const Point& p) const {
  for (std::size_t i = 1; i <= base.size(); ++i) {
    const auto sym = p.at(i);
    if (!sym || *sym != base[i - 1]) return false;
  }
  // The constraint on the symbol after the base is vacuous when the point
  // ends at the base.
  const auto next = p.at(base.size() + 1);
  if (next && std::binary_search(forbidden.begin(), forbidden.end(), *next)) return false;
  return true;
}

bool cylinder_contains(const Cylinder& c, const Point& p) { return c.contains(p); }

bool cylinders_intersect(const Cylinder& a, const Cylinder& b) {
  const Cylinder& shorter = a.base.size() <= b.base.size() ? a : b;
  const Cylinder& longer = a.base.size() <= b.base.size() ? b : a;
  if (!is_prefix(shorter.base, longer.base)) return false;
  if (longer.base.size() > shorter.base.size()) {
    const Symbol next = longer.base[shorter.base.size()];
    return !std::binary_search(shorter.forbidden.begin(), shorter.forbidden.end(), next);
  }
  // Equal bases: the intersection is Z(base, F1 ∪ F2), which contains the
  // base itself and, the alphabet being infinite, infinitely many extensions.
  return true;
}

}  // namespace shiftlab
