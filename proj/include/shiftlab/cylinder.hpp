#pragma once

#include "shiftlab/core.hpp"

namespace shiftlab {

/// Generalized cylinder Z(x, F): the points that start with the base word x
/// and whose next symbol, when one exists, avoids the finite set F. Finite
/// points of exactly the base length belong vacuously, so x ∈ Z(x, F) and in
/// particular Z(Ø, F) is a neighborhood of the empty sequence. These sets
/// form the basis of the topology on the full shift.
struct Cylinder {
  Word base;
  std::vector<Symbol> forbidden;  // sorted, duplicates removed

  Cylinder() = default;
  Cylinder(Word base_word, std::vector<Symbol> forbidden_symbols);

  bool contains(const Point& p) const;

  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

bool cylinder_contains(const Cylinder& c, const Point& p);

/// Exact emptiness decision for Z(x1,F1) ∩ Z(x2,F2) in the full shift over
/// the infinite alphabet: nonempty iff one base extends the other and the
/// first extra symbol of the longer base avoids the shorter cylinder's
/// forbidden set.
bool cylinders_intersect(const Cylinder& a, const Cylinder& b);

}  // namespace shiftlab
