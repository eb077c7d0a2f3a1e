#pragma once

#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/cylinder.hpp"

namespace shiftlab {

/// One neighborhood row of a finitary convergence certificate. Row m uses
/// the basic neighborhood with forbidden set {0..m-1} (finite limit) or the
/// plain cylinder on the first m limit symbols (infinite limit). On a pass,
/// `index` is the least n0 with every family member of index >= n0 inside
/// the neighborhood; on a fail it is the largest escaping member index.
struct ConvergenceRow {
  std::size_t m = 0;
  bool passed = false;
  std::size_t index = 0;
};

struct ConvergenceProfile {
  Point limit;
  std::size_t family_size = 0;
  std::vector<ConvergenceRow> rows;

  bool all_passed() const;
};

/// The basic neighborhood of the limit used by row m. Every finite forbidden
/// set is contained in some {0..m-1}, so sweeping m exhausts the
/// neighborhood basis of a finite limit.
Cylinder limit_neighborhood(const Point& limit, std::size_t m);

/// Family members are indexed 1..family.size().
ConvergenceProfile convergence_profile(const std::vector<Point>& family, const Point& limit,
                                       std::size_t m_max);

/// The shift map is not continuous at the empty sequence: the family
/// x_j = (j-1) 0 0 0 ... converges to Ø while the shifted family, constant
/// 0^inf, stays outside Z(Ø, {0}).
struct SigmaDiscontinuityReport {
  std::vector<Point> family;
  std::vector<Point> shifted_family;
  ConvergenceProfile family_profile;   // limit Ø; passes with n0(m) = m+1
  ConvergenceProfile shifted_profile;  // limit Ø; fails at m = 1
  bool demonstrates_discontinuity() const;
};

SigmaDiscontinuityReport sigma_discontinuity_demo(std::size_t family_size = 16,
                                                  std::size_t m_max = 8);

}  // namespace shiftlab
