#pragma once

#include <optional>
#include <vector>

#include "shiftlab/core.hpp"
#include "shiftlab/predicate.hpp"

namespace shiftlab {

/// Description of a shift space over the infinite alphabet: the full shift,
/// a finite forbidden-block list (a shift of finite type), or a window
/// predicate (a Step spec with window w describes a (w-1)-step shift).
class ShiftSpec {
 public:
  enum class Kind { Full, Forbidden, Step };

  static ShiftSpec full_shift();
  /// Throws std::invalid_argument on an empty list or an empty word.
  static ShiftSpec forbidden(std::vector<Word> words);
  static ShiftSpec step(WindowPredicate predicate);

  Kind kind() const { return kind_; }
  const std::vector<Word>& forbidden_words() const;
  const WindowPredicate& predicate() const;

  /// Membership checks inspect subblocks of exactly this length and shorter:
  /// the window length for Step, the longest forbidden word for Forbidden,
  /// and 1 for the full shift.
  std::size_t reach() const;

  friend bool operator==(const ShiftSpec&, const ShiftSpec&) = default;

 private:
  ShiftSpec() = default;
  Kind kind_ = Kind::Full;
  std::vector<Word> words_;
  std::optional<WindowPredicate> predicate_;
};

/// The induced map on finite words: 1 when the word is shorter than the
/// window, otherwise the product of the predicate over all sliding windows.
int induced_value(const WindowPredicate& predicate, const Word& x);

/// No subblock of x is forbidden / induced_value(x) = 1 / always true.
bool allowed(const ShiftSpec& spec, const Word& x);

/// Exact membership of an infinite point: every length-reach(spec) window is
/// allowed (shorter subblocks then pass as well). Throws
/// std::invalid_argument on Empty/Finite input.
bool in_inf(const ShiftSpec& spec, const Point& p);

/// A bijection of {0..s-1} extended by the identity elsewhere.
class SymbolPermutation {
 public:
  SymbolPermutation() = default;  // identity
  /// image[i] is the image of i. Throws std::invalid_argument when the map
  /// is not a bijection of {0..image.size()-1}.
  explicit SymbolPermutation(std::vector<Symbol> image);

  static SymbolPermutation identity() { return SymbolPermutation{}; }

  std::size_t support() const { return image_.size(); }
  Symbol apply(Symbol s) const;
  Symbol invert(Symbol s) const;
  Word apply_word(const Word& w) const;

 private:
  std::vector<Symbol> image_;
  std::vector<Symbol> inverse_;
};

/// Relabels every symbol occurrence of the spec through the permutation.
/// The result describes the conjugate shift space.
ShiftSpec permute_symbols(const ShiftSpec& spec, const SymbolPermutation& perm);

}  // namespace shiftlab
