#include "shiftlab/spec.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftlab {

ShiftSpec ShiftSpec::full_shift() {
  ShiftSpec s;
  s.kind_ = Kind::Full;
  return s;
}

ShiftSpec ShiftSpec::forbidden(std::vector<Word> words) {
  if (words.empty()) throw std::invalid_argument("forbidden spec needs at least one word");
  for (const auto& w : words) {
    if (w.empty()) throw std::invalid_argument("forbidden words must have length >= 1");
  }
  ShiftSpec s;
  s.kind_ = Kind::Forbidden;
  s.words_ = std::move(words);
  return s;
}

ShiftSpec ShiftSpec::step(WindowPredicate predicate) {
  ShiftSpec s;
  s.kind_ = Kind::Step;
  s.predicate_ = std::move(predicate);
  return s;
}

const std::vector<Word>& ShiftSpec::forbidden_words() const {
  if (kind_ != Kind::Forbidden) throw std::logic_error("spec has no forbidden-word list");
  return words_;
}

const WindowPredicate& ShiftSpec::predicate() const {
  if (kind_ != Kind::Step) throw std::logic_error("spec has no window predicate");
  return *predicate_;
}

std::size_t ShiftSpec::reach() const {
  switch (kind_) {
    case Kind::Full: return 1;
    case Kind::Forbidden: {
      std::size_t r = 1;
      for (const auto& w : words_) r = std::max(r, w.size());
      return r;
    }
    case Kind::Step: return predicate_->window();
  }
  return 1;
}

int induced_value(const WindowPredicate& predicate, const Word& x) {
  const std::size_t w = predicate.window();
  if (x.size() < w) return 1;
  for (std::size_t start = 0; start + w <= x.size(); ++start) {
    if (predicate.value(std::span<const Symbol>(x.data() + start, w)) == 0) return 0;
  }
  return 1;
}

bool allowed(const ShiftSpec& spec, const Word& x) {
  switch (spec.kind()) {
    case ShiftSpec::Kind::Full: return true;
    case ShiftSpec::Kind::Forbidden: {
      for (const auto& f : spec.forbidden_words()) {
        if (f.size() > x.size()) continue;
        if (std::search(x.begin(), x.end(), f.begin(), f.end()) != x.end()) return false;
      }
      return true;
    }
    case ShiftSpec::Kind::Step: return induced_value(spec.predicate(), x) == 1;
  }
  return true;
}

bool in_inf(const ShiftSpec& spec, const Point& p) {
  if (!p.is_infinite()) {
    throw std::invalid_argument("in_inf takes an infinite point; use in_fin for finite ones");
  }
  for (const auto& window : p.windows(spec.reach())) {
    if (!allowed(spec, window)) return false;
  }
  return true;
}

SymbolPermutation::SymbolPermutation(std::vector<Symbol> image) : image_(std::move(image)) {
  const std::size_t s = image_.size();
  inverse_.assign(s, 0);
  std::vector<bool> seen(s, false);
  for (std::size_t i = 0; i < s; ++i) {
    const Symbol v = image_[i];
    if (static_cast<std::size_t>(v) >= s || seen[v]) {
      throw std::invalid_argument("symbol permutation must be a bijection of {0..s-1}");
    }
    seen[v] = true;
    inverse_[v] = static_cast<Symbol>(i);
  }
}

Symbol SymbolPermutation::apply(Symbol s) const {
  return static_cast<std::size_t>(s) < image_.size() ? image_[s] : s;
}

Symbol SymbolPermutation::invert(Symbol s) const {
  return static_cast<std::size_t>(s) < inverse_.size() ? inverse_[s] : s;
}

Word SymbolPermutation::apply_word(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(apply(s));
  return out;
}

ShiftSpec permute_symbols(const ShiftSpec& spec, const SymbolPermutation& perm) {
  switch (spec.kind()) {
    case ShiftSpec::Kind::Full: return spec;
    case ShiftSpec::Kind::Forbidden: {
      std::vector<Word> words;
      words.reserve(spec.forbidden_words().size());
      for (const auto& w : spec.forbidden_words()) words.push_back(perm.apply_word(w));
      return ShiftSpec::forbidden(std::move(words));
    }
    case ShiftSpec::Kind::Step: {
      const auto& pred = spec.predicate();
      if (std::holds_alternative<WindowPredicate::FirstEqualsLast>(pred.rule())) {
        return spec;  // fixed by every relabeling
      }
      if (const auto* zse = std::get_if<WindowPredicate::ZeroStepExample>(&pred.rule())) {
        return ShiftSpec::step(WindowPredicate(
            pred.window(), WindowPredicate::ZeroStepExample{perm.apply(zse->x0)}));
      }
      const auto& table = std::get<WindowPredicate::Table>(pred.rule());
      WindowPredicate::Table mapped;
      mapped.support = std::max(table.support, perm.support());
      mapped.fallback = table.fallback;
      // Relabeling the stored entries is exact: a window absent from both
      // tables falls back on the same bit on both sides.
      for (const auto& [key, bit] : table.entries) {
        mapped.entries[perm.apply_word(key)] = bit;
      }
      return ShiftSpec::step(WindowPredicate(pred.window(), std::move(mapped)));
    }
  }
  return spec;
}

}  // namespace shiftlab
