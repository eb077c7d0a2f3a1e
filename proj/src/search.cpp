#include "shiftlab/search.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace shiftlab {

namespace {

// Hard cap on materialized follower-graph states; budgets whose truncated
// state space exceeds it are rejected rather than silently truncated.
constexpr std::uint64_t kStateCap = std::uint64_t{1} << 22;

// context holds the last min(written, reach-1) symbols of the sequence
// written so far; returns whether appending c keeps every new subblock
// allowed.
bool extension_ok(const ShiftSpec& spec, std::span<const Symbol> context, Symbol c) {
  switch (spec.kind()) {
    case ShiftSpec::Kind::Full:
      return true;
    case ShiftSpec::Kind::Step: {
      const auto& pred = spec.predicate();
      if (context.size() + 1 < pred.window()) return true;
      if (std::holds_alternative<WindowPredicate::FirstEqualsLast>(pred.rule())) {
        return context.front() == c;
      }
      if (const auto* zse = std::get_if<WindowPredicate::ZeroStepExample>(&pred.rule())) {
        return context.front() == zse->x0 || c == context.front();
      }
      Word window(context.begin(), context.end());
      window.push_back(c);
      return pred.value(window) == 1;
    }
    case ShiftSpec::Kind::Forbidden: {
      for (const auto& f : spec.forbidden_words()) {
        if (f.size() > context.size() + 1) continue;
        if (f.back() != c) continue;
        const std::size_t overlap = f.size() - 1;
        if (!std::equal(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(overlap),
                        context.end() - static_cast<std::ptrdiff_t>(overlap))) {
          continue;
        }
        return false;
      }
      return true;
    }
  }
  return true;
}

struct BfsNode {
  Word config;
  std::ptrdiff_t parent;
  Symbol symbol;
};

Word path_symbols(const std::vector<BfsNode>& nodes, std::ptrdiff_t leaf) {
  Word out;
  for (std::ptrdiff_t i = leaf; nodes[static_cast<std::size_t>(i)].parent >= 0;
       i = nodes[static_cast<std::size_t>(i)].parent) {
    out.push_back(nodes[static_cast<std::size_t>(i)].symbol);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<std::size_t> WitnessVerdict::count_at(std::size_t truncation) const {
  for (const auto& [n, c] : counts_at) {
    if (n == truncation) return c;
  }
  return std::nullopt;
}

ContinuationSearcher::ContinuationSearcher(ShiftSpec spec, std::size_t truncation,
                                           std::size_t period_bound)
    : spec_(std::move(spec)),
      truncation_(truncation),
      period_bound_(period_bound),
      state_len_(spec_.reach() - 1) {
  if (truncation_ < 1) throw std::invalid_argument("searcher needs truncation >= 1");
  if (period_bound_ < 1) throw std::invalid_argument("searcher needs period bound >= 1");
}

// Shortest (then lexicographically least) cycle of length <= period_bound
// through `state`, as its symbol word; memoized.
const std::optional<Word>& ContinuationSearcher::small_cycle(const Word& state) const {
  if (auto it = cycle_memo_.find(state); it != cycle_memo_.end()) return it->second;

  std::vector<BfsNode> nodes;
  std::vector<std::size_t> depth;
  std::set<Word> visited;
  std::optional<Word> found;

  // Successors at next_depth close a cycle of exactly that length when they
  // hit `state`; nodes at depth >= period_bound cannot close in time.
  auto expand = [&](const Word& from, std::ptrdiff_t parent, std::size_t next_depth) {
    for (Symbol c = 0; c < truncation_ && !found; ++c) {
      if (!extension_ok(spec_, from, c)) continue;
      Word next = from;
      next.push_back(c);
      if (next.size() > state_len_) next.erase(next.begin());
      if (next == state) {
        nodes.push_back({std::move(next), parent, c});
        found = path_symbols(nodes, static_cast<std::ptrdiff_t>(nodes.size()) - 1);
        return;
      }
      if (next_depth >= period_bound_) continue;
      if (!visited.insert(next).second) continue;
      nodes.push_back({std::move(next), parent, c});
      depth.push_back(next_depth);
    }
  };

  nodes.push_back({state, -1, 0});  // root; its placeholder symbol is never collected
  depth.push_back(0);
  std::size_t head = 0;
  while (!found && head < nodes.size()) {
    const std::size_t i = head++;
    const Word from = nodes[i].config;  // copy: expand may reallocate nodes
    expand(from, static_cast<std::ptrdiff_t>(i), depth[i] + 1);
  }
  auto [it, inserted] = cycle_memo_.emplace(state, std::move(found));
  (void)inserted;
  return it->second;
}

std::optional<Point> ContinuationSearcher::continuation(const Word& prefix) const {
  if (!allowed(spec_, prefix)) return std::nullopt;

  Word start = prefix;
  if (start.size() > state_len_) {
    start.erase(start.begin(), start.end() - static_cast<std::ptrdiff_t>(state_len_));
  }
  if (dead_.contains(start)) return std::nullopt;

  std::vector<BfsNode> nodes;
  nodes.push_back({start, -1, 0});
  std::set<Word> visited{start};
  std::size_t head = 0;
  while (head < nodes.size()) {
    const std::size_t i = head++;
    const Word config = nodes[i].config;  // copy: nodes may reallocate below
    if (config.size() == state_len_) {
      if (const auto& cycle = small_cycle(config)) {
        return Point::eventually_periodic(path_symbols(nodes, static_cast<std::ptrdiff_t>(i)),
                                          *cycle);
      }
    }
    for (Symbol c = 0; c < truncation_; ++c) {
      if (!extension_ok(spec_, config, c)) continue;
      Word next = config;
      next.push_back(c);
      if (next.size() > state_len_) next.erase(next.begin());
      if (dead_.contains(next)) continue;
      if (!visited.insert(next).second) continue;
      if (visited.size() > kStateCap) {
        throw std::runtime_error(
            "continuation search exceeded the state cap; reduce the truncation or the "
            "spec window");
      }
      nodes.push_back({std::move(next), static_cast<std::ptrdiff_t>(i), c});
    }
  }
  // The whole reachable set was explored without meeting a small cycle.
  for (const auto& cfg : visited) dead_.insert(cfg);
  return std::nullopt;
}

namespace {

WitnessVerdict scan_extensions(const ContinuationSearcher& searcher, const Word& x) {
  WitnessVerdict verdict;
  if (allowed(searcher.spec(), x)) {
    for (Symbol a = 0; a < searcher.truncation(); ++a) {
      Word u = x;
      u.push_back(a);
      if (auto y = searcher.continuation(u)) {
        verdict.witnesses.emplace_back(a, std::move(*y));
      }
    }
  }
  verdict.counts_at.emplace_back(searcher.truncation(), verdict.witnesses.size());
  return verdict;
}

}  // namespace

WitnessVerdict extension_witnesses(const ShiftSpec& spec, const Word& x,
                                   const SearchBudget& budget) {
  budget.validate();
  ContinuationSearcher searcher(spec, budget.truncation, budget.period_bound);
  WitnessVerdict verdict = scan_extensions(searcher, x);
  verdict.verified = verdict.count() >= budget.threshold;
  return verdict;
}

WitnessVerdict in_fin(const ShiftSpec& spec, const Word& x, const SearchBudget& budget) {
  budget.validate();
  ContinuationSearcher searcher(spec, budget.truncation, budget.period_bound);
  WitnessVerdict verdict = scan_extensions(searcher, x);
  verdict.verified = verdict.count() >= budget.threshold;
  const std::size_t half = budget.truncation / 2;
  if (half >= 1 && half < budget.truncation) {
    ContinuationSearcher half_searcher(spec, half, budget.period_bound);
    const WitnessVerdict at_half = scan_extensions(half_searcher, x);
    verdict.counts_at.insert(verdict.counts_at.begin(), {half, at_half.count()});
  }
  return verdict;
}

MembershipResult membership(const ShiftSpec& spec, const Point& p, const SearchBudget& budget) {
  if (p.is_infinite()) return in_inf(spec, p);
  const Word word = p.kind() == Point::Kind::Finite ? p.word() : Word{};
  return in_fin(spec, word, budget);
}

std::vector<Word> language_up_to(const ShiftSpec& spec, std::size_t max_len,
                                 const SearchBudget& budget) {
  budget.validate();
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (Symbol c = 0; c < budget.truncation; ++c) {
        Word candidate = w;
        candidate.push_back(c);
        if (allowed(spec, candidate)) next.push_back(std::move(candidate));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

namespace {

std::uint64_t checked_pow(std::size_t base, std::size_t exp, std::uint64_t cap,
                          const char* what) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / std::max<std::uint64_t>(base, 1)) {
      throw std::runtime_error(std::string(what) +
                               ": truncated search space too large; reduce the truncation, "
                               "window, or length");
    }
    v *= base;
  }
  if (v > cap) {
    throw std::runtime_error(std::string(what) + ": truncated search space too large");
  }
  return v;
}

// Dense follower-graph analysis over all n^(reach-1) states, used for exact
// spectrum rows at lengths >= reach-1. States are base-n encodings of the
// (reach-1)-blocks, most significant symbol first, so numeric order of ids
// is lexicographic order of the blocks.
class DenseAnalysis {
 public:
  DenseAnalysis(const ShiftSpec& spec, std::size_t truncation, std::size_t period_bound)
      : spec_(spec), n_(truncation), state_len_(spec.reach() - 1) {
    states_ = checked_pow(n_, state_len_, kStateCap, "length_spectrum");
    shift_pow_ = state_len_ == 0 ? 1 : states_ / n_;
    valid_.assign(states_, 0);
    Word w;
    for (std::uint64_t id = 0; id < states_; ++id) {
      decode(id, w);
      valid_[id] = allowed(spec_, w) ? 1 : 0;
    }
    compute_cycles(period_bound);
    compute_good();
    compute_counts();
  }

  std::uint64_t states() const { return states_; }
  bool valid(std::uint64_t id) const { return valid_[id] != 0; }
  std::size_t extension_count(std::uint64_t id) const { return counts_[id]; }

  std::uint64_t target(std::uint64_t id, Symbol c) const {
    if (state_len_ == 0) return 0;  // the single empty-word state
    return (id % shift_pow_) * n_ + c;
  }

  void decode(std::uint64_t id, Word& out) const {
    out.assign(state_len_, 0);
    for (std::size_t i = state_len_; i-- > 0;) {
      out[i] = static_cast<Symbol>(id % n_);
      id /= n_;
    }
  }

  bool edge_ok(const Word& from_word, Symbol c) const {
    return extension_ok(spec_, from_word, c);
  }

 private:
  void compute_cycles(std::size_t period_bound) {
    on_cycle_.assign(states_, 0);
    std::vector<std::uint32_t> stamp(states_, 0);
    std::uint32_t tick = 0;
    std::vector<std::uint64_t> queue;
    std::vector<std::size_t> depth;
    Word from_word;
    for (std::uint64_t id = 0; id < states_; ++id) {
      if (!valid_[id]) continue;
      ++tick;
      queue.assign(1, id);
      depth.assign(1, 0);
      bool found = false;
      for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const std::uint64_t from = queue[head];
        const std::size_t d = depth[head];
        decode(from, from_word);
        for (Symbol c = 0; c < n_; ++c) {
          if (!edge_ok(from_word, c)) continue;
          const std::uint64_t to = target(from, c);
          if (!valid_[to]) continue;
          if (to == id) {
            found = true;
            break;
          }
          if (d + 1 >= period_bound) continue;
          if (stamp[to] == tick) continue;
          stamp[to] = tick;
          queue.push_back(to);
          depth.push_back(d + 1);
        }
      }
      on_cycle_[id] = found ? 1 : 0;
    }
  }

  void compute_good() {
    good_ = on_cycle_;
    Word from_word;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint64_t id = 0; id < states_; ++id) {
        if (!valid_[id] || good_[id]) continue;
        decode(id, from_word);
        for (Symbol c = 0; c < n_; ++c) {
          if (!edge_ok(from_word, c)) continue;
          const std::uint64_t to = target(id, c);
          if (valid_[to] && good_[to]) {
            good_[id] = 1;
            changed = true;
            break;
          }
        }
      }
    }
  }

  void compute_counts() {
    counts_.assign(states_, 0);
    Word from_word;
    for (std::uint64_t id = 0; id < states_; ++id) {
      if (!valid_[id]) continue;
      decode(id, from_word);
      std::size_t count = 0;
      for (Symbol c = 0; c < n_; ++c) {
        if (!edge_ok(from_word, c)) continue;
        const std::uint64_t to = target(id, c);
        if (valid_[to] && good_[to]) ++count;
      }
      counts_[id] = count;
    }
  }

  const ShiftSpec& spec_;
  std::size_t n_;
  std::size_t state_len_;
  std::uint64_t states_ = 0;
  std::uint64_t shift_pow_ = 1;
  std::vector<std::uint8_t> valid_;
  std::vector<std::uint8_t> on_cycle_;
  std::vector<std::uint8_t> good_;
  std::vector<std::size_t> counts_;
};

bool verified_word(const ContinuationSearcher& searcher, const Word& x, std::size_t threshold) {
  if (!allowed(searcher.spec(), x)) return false;
  std::size_t count = 0;
  for (Symbol a = 0; a < searcher.truncation(); ++a) {
    Word u = x;
    u.push_back(a);
    if (searcher.continuation(u)) {
      if (++count >= threshold) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<SpectrumRow> length_spectrum(const ShiftSpec& spec, std::size_t max_len,
                                         const SearchBudget& budget) {
  budget.validate();
  const std::size_t state_len = spec.reach() - 1;
  std::vector<SpectrumRow> rows;
  rows.reserve(max_len + 1);

  // Lengths shorter than a graph state: direct lexicographic scan.
  ContinuationSearcher searcher(spec, budget.truncation, budget.period_bound);
  for (std::size_t len = 0; len <= max_len && len < state_len; ++len) {
    checked_pow(budget.truncation, len, kStateCap, "length_spectrum");
    SpectrumRow row;
    row.length = len;
    Word w(len, 0);
    do {
      if (verified_word(searcher, w, budget.threshold)) {
        row.verified = true;
        row.witness = w;
        break;
      }
    } while (next_word_lex(w, budget.truncation));
    rows.push_back(std::move(row));
  }
  if (max_len < state_len) return rows;

  DenseAnalysis dense(spec, budget.truncation, budget.period_bound);
  std::vector<std::uint8_t> enough(dense.states(), 0);
  bool any = false;
  for (std::uint64_t id = 0; id < dense.states(); ++id) {
    if (dense.valid(id) && dense.extension_count(id) >= budget.threshold) {
      enough[id] = 1;
      any = true;
    }
  }

  // can_reach[k][id]: some valid path of length k from id ends in a state
  // with a verified extension count.
  const std::size_t k_max = max_len - state_len;
  std::vector<std::vector<std::uint8_t>> can_reach;
  can_reach.push_back(enough);
  Word from_word;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<std::uint8_t> layer(dense.states(), 0);
    if (any) {
      const auto& prev = can_reach.back();
      for (std::uint64_t id = 0; id < dense.states(); ++id) {
        if (!dense.valid(id)) continue;
        dense.decode(id, from_word);
        for (Symbol c = 0; c < budget.truncation; ++c) {
          if (!dense.edge_ok(from_word, c)) continue;
          if (prev[dense.target(id, c)]) {
            layer[id] = 1;
            break;
          }
        }
      }
    }
    can_reach.push_back(std::move(layer));
  }

  for (std::size_t len = state_len; len <= max_len; ++len) {
    SpectrumRow row;
    row.length = len;
    const std::size_t k = len - state_len;
    for (std::uint64_t id = 0; id < dense.states(); ++id) {
      if (!dense.valid(id) || !can_reach[k][id]) continue;
      Word word;
      dense.decode(id, word);
      std::uint64_t state = id;
      for (std::size_t step = k; step > 0; --step) {
        dense.decode(state, from_word);
        for (Symbol c = 0; c < budget.truncation; ++c) {
          if (!dense.edge_ok(from_word, c)) continue;
          const std::uint64_t to = dense.target(state, c);
          if (can_reach[step - 1][to]) {
            word.push_back(c);
            state = to;
            break;
          }
        }
      }
      row.verified = true;
      row.witness = std::move(word);
      break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

void collect_periodic(const ShiftSpec& spec, std::size_t period, std::size_t truncation,
                      Word& block, std::set<Point>& out) {
  if (block.size() == period) {
    Point p = Point::eventually_periodic({}, block);
    if (in_inf(spec, p)) out.insert(std::move(p));
    return;
  }
  for (Symbol c = 0; c < truncation; ++c) {
    block.push_back(c);
    if (allowed(spec, block)) collect_periodic(spec, period, truncation, block, out);
    block.pop_back();
  }
}

}  // namespace

std::vector<Point> periodic_points(const ShiftSpec& spec, std::size_t period,
                                   const SearchBudget& budget) {
  budget.validate();
  if (period < 1) throw std::invalid_argument("periodic_points needs period >= 1");
  checked_pow(budget.truncation, period, kStateCap, "periodic_points");
  std::set<Point> found;
  Word block;
  block.reserve(period);
  collect_periodic(spec, period, budget.truncation, block, found);
  return std::vector<Point>(found.begin(), found.end());
}

}  // namespace shiftlab
