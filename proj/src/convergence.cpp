#include "shiftlab/convergence.hpp"

#include <stdexcept>

namespace shiftlab {

bool ConvergenceProfile::all_passed() const {
  for (const auto& row : rows) {
    if (!row.passed) return false;
  }
  return true;
}

Cylinder limit_neighborhood(const Point& limit, std::size_t m) {
  if (m == 0) throw std::invalid_argument("neighborhood rows are indexed from m = 1");
  if (limit.is_infinite()) {
    return Cylinder(limit.prefix(m), {});
  }
  std::vector<Symbol> forbidden;
  forbidden.reserve(m);
  for (std::size_t s = 0; s < m; ++s) forbidden.push_back(static_cast<Symbol>(s));
  const Word base = limit.kind() == Point::Kind::Finite ? limit.word() : Word{};
  return Cylinder(base, std::move(forbidden));
}

ConvergenceProfile convergence_profile(const std::vector<Point>& family, const Point& limit,
                                       std::size_t m_max) {
  if (family.empty()) throw std::invalid_argument("convergence profile needs a nonempty family");
  if (m_max == 0) throw std::invalid_argument("convergence profile needs m_max >= 1");
  ConvergenceProfile profile;
  profile.limit = limit;
  profile.family_size = family.size();
  for (std::size_t m = 1; m <= m_max; ++m) {
    const Cylinder nb = limit_neighborhood(limit, m);
    std::size_t largest_violator = 0;  // 0 = none
    for (std::size_t j = 1; j <= family.size(); ++j) {
      if (!nb.contains(family[j - 1])) largest_violator = j;
    }
    ConvergenceRow row;
    row.m = m;
    if (largest_violator == family.size()) {
      row.passed = false;
      row.index = largest_violator;
    } else {
      row.passed = true;
      row.index = largest_violator + 1;
    }
    profile.rows.push_back(row);
  }
  return profile;
}

bool SigmaDiscontinuityReport::demonstrates_discontinuity() const {
  return family_profile.all_passed() && !shifted_profile.rows.empty() &&
         !shifted_profile.rows.front().passed;
}

SigmaDiscontinuityReport sigma_discontinuity_demo(std::size_t family_size, std::size_t m_max) {
  if (family_size <= m_max) {
    throw std::invalid_argument("sigma demo needs family_size > m_max for conclusive rows");
  }
  SigmaDiscontinuityReport report;
  for (std::size_t j = 1; j <= family_size; ++j) {
    // Member j starts with symbol j-1 and continues with zeros.
    report.family.push_back(
        Point::eventually_periodic({static_cast<Symbol>(j - 1)}, {Symbol{0}}));
  }
  for (const auto& p : report.family) report.shifted_family.push_back(p.shifted());
  report.family_profile = convergence_profile(report.family, Point::empty(), m_max);
  report.shifted_profile = convergence_profile(report.shifted_family, Point::empty(), m_max);
  return report;
}

}  // namespace shiftlab
