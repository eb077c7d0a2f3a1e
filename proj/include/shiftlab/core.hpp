#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace shiftlab {

/// Alphabet symbols are natural-number indices; the alphabet itself is all
/// of ℕ. Any display labelling is cosmetic and lives outside the library.
using Symbol = std::uint32_t;

/// A finite word over the alphabet. Length 0 is the empty sequence.
using Word = std::vector<Symbol>;

/// Sentinel length for infinite sequences.
inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

bool is_prefix(const Word& prefix, const Word& word);

/// Advances a fixed-length word to its lexicographic successor over the
/// alphabet {0..n-1}; false once the last word is passed.
bool next_word_lex(Word& word, std::size_t alphabet_size);

/// Space-separated symbol list; "e" for the empty word.
std::string format_word(const Word& word);

/// A point of the full shift over ℕ: the empty sequence, a nonempty finite
/// sequence, or an infinite sequence stored as a lasso (preperiod + period).
///
/// Infinite points are always kept in canonical form: the period block is
/// primitive (not a power of a shorter block) and the preperiod is minimal
/// (its last symbol differs from the cyclically aligned period symbol).
/// Canonical form makes equality a plain structural comparison.
class Point {
 public:
  enum class Kind { Empty, Finite, EventuallyPeriodic };

  Point() = default;  // the empty sequence

  static Point empty();
  /// finite(Ø) collapses to empty().
  static Point finite(Word word);
  /// Canonicalizes the lasso description. Throws std::invalid_argument when
  /// the period block is empty.
  static Point eventually_periodic(Word preperiod, Word period);

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::EventuallyPeriodic; }

  /// Finite variant only.
  const Word& word() const;
  /// EventuallyPeriodic variant only.
  const Word& preperiod() const;
  const Word& period() const;

  /// kInfinity for infinite points.
  std::size_t length() const;

  /// 1-based index; nullopt past the end of a finite point.
  std::optional<Symbol> at(std::size_t i) const;

  /// First min(depth, length) symbols.
  Word prefix(std::size_t depth) const;

  /// The shift map: drops the first symbol; Ø and length-1 words go to Ø.
  Point shifted() const;

  /// All distinct subblocks of the given length. Exact for infinite points:
  /// every window of the lasso occurs within the first |pre| + |per| start
  /// positions. Throws std::invalid_argument when len == 0.
  std::set<Word> windows(std::size_t len) const;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;

 private:
  Kind kind_ = Kind::Empty;
  Word head_;   // finite word, or preperiod
  Word cycle_;  // period block (EventuallyPeriodic only)
};

std::size_t length(const Point& p);
Point shift(const Point& p);
Point canonicalize(Word preperiod, Word period);
std::optional<Symbol> symbol_at(const Point& p, std::size_t i);
std::set<Word> windows(const Point& p, std::size_t len);

/// The point obtained by writing `prefix` and then continuing with `tail`.
Point prepend(const Word& prefix, const Point& tail);

std::string format_point(const Point& p);

}  // namespace shiftlab
