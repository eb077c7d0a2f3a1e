#include "shiftlab/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shiftlab {

bool is_prefix(const Word& prefix, const Word& word) {
  if (prefix.size() > word.size()) return false;
  return std::equal(prefix.begin(), prefix.end(), word.begin());
}

bool next_word_lex(Word& word, std::size_t alphabet_size) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (static_cast<std::size_t>(word[i]) + 1 < alphabet_size) {
      ++word[i];
      std::fill(word.begin() + static_cast<std::ptrdiff_t>(i) + 1, word.end(), Symbol{0});
      return true;
    }
  }
  return false;
}

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out << ' ';
    out << word[i];
  }
  return out.str();
}

namespace {

// Shortest block whose repetition yields `period`.
Word primitive_root(const Word& period) {
  const std::size_t q = period.size();
  for (std::size_t d = 1; d <= q / 2; ++d) {
    if (q % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < q && repeats; ++i) {
      repeats = period[i] == period[i - d];
    }
    if (repeats) return Word(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return period;
}

}  // namespace

Point Point::empty() { return Point{}; }

Point Point::finite(Word word) {
  if (word.empty()) return Point{};
  Point p;
  p.kind_ = Kind::Finite;
  p.head_ = std::move(word);
  return p;
}

Point Point::eventually_periodic(Word preperiod, Word period) {
  if (period.empty()) {
    throw std::invalid_argument("eventually periodic point needs a nonempty period");
  }
  Word per = primitive_root(period);
  Word pre = std::move(preperiod);
  // Roll the lasso boundary back while the preperiod tail repeats the
  // cyclically aligned period symbol; rotations keep the period primitive.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
  }
  Point p;
  p.kind_ = Kind::EventuallyPeriodic;
  p.head_ = std::move(pre);
  p.cycle_ = std::move(per);
  return p;
}

const Word& Point::word() const {
  if (kind_ != Kind::Finite) throw std::logic_error("word(): point is not finite");
  return head_;
}

const Word& Point::preperiod() const {
  if (kind_ != Kind::EventuallyPeriodic) throw std::logic_error("preperiod(): point is not infinite");
  return head_;
}

const Word& Point::period() const {
  if (kind_ != Kind::EventuallyPeriodic) throw std::logic_error("period(): point is not infinite");
  return cycle_;
}

std::size_t Point::length() const {
  switch (kind_) {
    case Kind::Empty: return 0;
    case Kind::Finite: return head_.size();
    case Kind::EventuallyPeriodic: return kInfinity;
  }
  return 0;
}

std::optional<Symbol> Point::at(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("symbol positions are 1-based");
  switch (kind_) {
    case Kind::Empty: return std::nullopt;
    case Kind::Finite:
      if (i > head_.size()) return std::nullopt;
      return head_[i - 1];
    case Kind::EventuallyPeriodic:
      if (i <= head_.size()) return head_[i - 1];
      return cycle_[(i - head_.size() - 1) % cycle_.size()];
  }
  return std::nullopt;
}

Word Point::prefix(std::size_t depth) const {
  Word out;
  if (kind_ == Kind::Empty) return out;
  if (kind_ == Kind::Finite) {
    const std::size_t k = std::min(depth, head_.size());
    out.assign(head_.begin(), head_.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }
  out.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    if (i < head_.size()) {
      out.push_back(head_[i]);
    } else {
      out.push_back(cycle_[(i - head_.size()) % cycle_.size()]);
    }
  }
  return out;
}

Point Point::shifted() const {
  switch (kind_) {
    case Kind::Empty: return Point{};
    case Kind::Finite: {
      if (head_.size() <= 1) return Point{};
      return finite(Word(head_.begin() + 1, head_.end()));
    }
    case Kind::EventuallyPeriodic: {
      if (!head_.empty()) {
        return eventually_periodic(Word(head_.begin() + 1, head_.end()), cycle_);
      }
      Word rotated(cycle_.begin() + 1, cycle_.end());
      rotated.push_back(cycle_.front());
      return eventually_periodic({}, std::move(rotated));
    }
  }
  return Point{};
}

std::set<Word> Point::windows(std::size_t len) const {
  if (len == 0) throw std::invalid_argument("window length must be at least 1");
  std::set<Word> out;
  if (kind_ == Kind::Empty) return out;
  if (kind_ == Kind::Finite) {
    if (head_.size() < len) return out;
    for (std::size_t start = 0; start + len <= head_.size(); ++start) {
      out.insert(Word(head_.begin() + static_cast<std::ptrdiff_t>(start),
                      head_.begin() + static_cast<std::ptrdiff_t>(start + len)));
    }
    return out;
  }
  // Window contents at start position i > |pre| depend only on
  // (i - |pre| - 1) mod |per|, so start positions 1..|pre|+|per| are exhaustive.
  const std::size_t starts = head_.size() + cycle_.size();
  const Word unrolled = prefix(starts + len - 1);
  for (std::size_t start = 0; start < starts; ++start) {
    out.insert(Word(unrolled.begin() + static_cast<std::ptrdiff_t>(start),
                    unrolled.begin() + static_cast<std::ptrdiff_t>(start + len)));
  }
  return out;
}

std::size_t length(const Point& p) { return p.length(); }

Point shift(const Point& p) { return p.shifted(); }

Point canonicalize(Word preperiod, Word period) {
  return Point::eventually_periodic(std::move(preperiod), std::move(period));
}

std::optional<Symbol> symbol_at(const Point& p, std::size_t i) { return p.at(i); }

std::set<Word> windows(const Point& p, std::size_t len) { return p.windows(len); }

Point prepend(const Word& prefix, const Point& tail) {
  if (prefix.empty()) return tail;
  switch (tail.kind()) {
    case Point::Kind::Empty: return Point::finite(prefix);
    case Point::Kind::Finite: {
      Word joined = prefix;
      joined.insert(joined.end(), tail.word().begin(), tail.word().end());
      return Point::finite(std::move(joined));
    }
    case Point::Kind::EventuallyPeriodic: {
      Word pre = prefix;
      pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
      return Point::eventually_periodic(std::move(pre), tail.period());
    }
  }
  return tail;
}

std::string format_point(const Point& p) {
  switch (p.kind()) {
    case Point::Kind::Empty: return "e";
    case Point::Kind::Finite: return format_word(p.word());
    case Point::Kind::EventuallyPeriodic: {
      std::string out;
      if (!p.preperiod().empty()) {
        out = format_word(p.preperiod()) + " ";
      }
      out += "(" + format_word(p.period()) + ")^inf";
      return out;
    }
  }
  return "e";
}

}  // namespace shiftlab
