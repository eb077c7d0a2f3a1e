#include "shiftlab/json_io.hpp"

#include <stdexcept>

namespace shiftlab {

using nlohmann::json;

namespace {

Word word_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array of symbols");
  Word w;
  w.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      throw std::invalid_argument(std::string(what) + ": symbols are non-negative integers");
    }
    w.push_back(v.get<Symbol>());
  }
  return w;
}

std::string kind_of(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument(std::string(what) + ": expected an object with a \"kind\" field");
  }
  return j.at("kind").get<std::string>();
}

}  // namespace

json to_json(const Point& p) {
  switch (p.kind()) {
    case Point::Kind::Empty: return json{{"kind", "empty"}};
    case Point::Kind::Finite: return json{{"kind", "finite"}, {"word", p.word()}};
    case Point::Kind::EventuallyPeriodic:
      return json{{"kind", "ep"}, {"pre", p.preperiod()}, {"per", p.period()}};
  }
  return json{{"kind", "empty"}};
}

Point point_from_json(const json& j) {
  const std::string kind = kind_of(j, "point");
  if (kind == "empty") return Point::empty();
  if (kind == "finite") return Point::finite(word_from_json(j.at("word"), "point word"));
  if (kind == "ep") {
    const Word pre = j.contains("pre") ? word_from_json(j.at("pre"), "point pre") : Word{};
    return Point::eventually_periodic(pre, word_from_json(j.at("per"), "point per"));
  }
  throw std::invalid_argument("point: unknown kind \"" + kind + "\"");
}

json to_json(const Cylinder& c) {
  return json{{"base", c.base}, {"forbidden", c.forbidden}};
}

Cylinder cylinder_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("cylinder: expected an object");
  const Word base = j.contains("base") ? word_from_json(j.at("base"), "cylinder base") : Word{};
  const Word forb =
      j.contains("forbidden") ? word_from_json(j.at("forbidden"), "cylinder forbidden") : Word{};
  return Cylinder(base, std::vector<Symbol>(forb.begin(), forb.end()));
}

json to_json(const SearchBudget& b) {
  return json{{"truncation", b.truncation},
              {"threshold", b.threshold},
              {"period_bound", b.period_bound},
              {"depth", b.depth}};
}

SearchBudget budget_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("budget: expected an object");
  SearchBudget b;
  if (j.contains("truncation")) b.truncation = j.at("truncation").get<std::size_t>();
  if (j.contains("threshold")) b.threshold = j.at("threshold").get<std::size_t>();
  if (j.contains("period_bound")) b.period_bound = j.at("period_bound").get<std::size_t>();
  if (j.contains("depth")) b.depth = j.at("depth").get<std::size_t>();
  b.validate();
  return b;
}

json to_json(const WindowPredicate& p) {
  if (std::holds_alternative<WindowPredicate::FirstEqualsLast>(p.rule())) {
    return json{{"kind", "first_equals_last"}};
  }
  if (const auto* zse = std::get_if<WindowPredicate::ZeroStepExample>(&p.rule())) {
    return json{{"kind", "zero_step_example"}, {"x0", zse->x0}};
  }
  const auto& table = std::get<WindowPredicate::Table>(p.rule());
  json entries = json::array();
  for (const auto& [window, value] : table.entries) {
    entries.push_back(json{{"window", window}, {"value", value}});
  }
  return json{{"kind", "table"},
              {"support", table.support},
              {"entries", std::move(entries)},
              {"default", table.fallback}};
}

WindowPredicate predicate_from_json(const json& j, std::size_t window) {
  const std::string kind = kind_of(j, "predicate");
  if (kind == "first_equals_last") {
    return WindowPredicate(window, WindowPredicate::FirstEqualsLast{});
  }
  if (kind == "zero_step_example") {
    if (!j.contains("x0")) throw std::invalid_argument("zero_step_example predicate needs x0");
    return WindowPredicate(window,
                           WindowPredicate::ZeroStepExample{j.at("x0").get<Symbol>()});
  }
  if (kind == "table") {
    WindowPredicate::Table table;
    table.support = j.value("support", std::size_t{0});
    table.fallback = j.value("default", 0);
    if (j.contains("entries")) {
      for (const auto& e : j.at("entries")) {
        table.entries[word_from_json(e.at("window"), "table window")] = e.at("value").get<int>();
      }
    }
    return WindowPredicate(window, std::move(table));
  }
  throw std::invalid_argument("predicate: unknown kind \"" + kind + "\"");
}

json to_json(const ShiftSpec& s) {
  switch (s.kind()) {
    case ShiftSpec::Kind::Full: return json{{"kind", "full"}};
    case ShiftSpec::Kind::Forbidden: return json{{"kind", "forbidden"}, {"words", s.forbidden_words()}};
    case ShiftSpec::Kind::Step:
      return json{{"kind", "step"},
                  {"window", s.predicate().window()},
                  {"predicate", to_json(s.predicate())}};
  }
  return json{{"kind", "full"}};
}

ShiftSpec spec_from_json(const json& j) {
  const std::string kind = kind_of(j, "spec");
  if (kind == "full") return ShiftSpec::full_shift();
  if (kind == "forbidden") {
    if (!j.contains("words")) throw std::invalid_argument("forbidden spec needs \"words\"");
    std::vector<Word> words;
    for (const auto& w : j.at("words")) words.push_back(word_from_json(w, "forbidden word"));
    return ShiftSpec::forbidden(std::move(words));
  }
  if (kind == "step") {
    if (!j.contains("window")) throw std::invalid_argument("step spec needs \"window\"");
    const auto window = j.at("window").get<std::size_t>();
    if (!j.contains("predicate")) throw std::invalid_argument("step spec needs \"predicate\"");
    return ShiftSpec::step(predicate_from_json(j.at("predicate"), window));
  }
  throw std::invalid_argument("spec: unknown kind \"" + kind + "\"");
}

namespace {

json counts_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& counts) {
  json out = json::array();
  for (const auto& [truncation, count] : counts) {
    out.push_back(json{{"truncation", truncation}, {"count", count}});
  }
  return out;
}

}  // namespace

json to_json(const WitnessVerdict& v) {
  json witnesses = json::array();
  for (const auto& [symbol, continuation] : v.witnesses) {
    witnesses.push_back(json{{"symbol", symbol}, {"continuation", to_json(continuation)}});
  }
  return json{{"status", v.verified ? "verified" : "not_verified_up_to_budget"},
              {"witnesses", std::move(witnesses)},
              {"counts", counts_to_json(v.counts_at)}};
}

json to_json(const ConvergenceProfile& p) {
  json rows = json::array();
  for (const auto& row : p.rows) {
    rows.push_back(json{{"m", row.m},
                        {"status", row.passed ? "pass" : "fail"},
                        {"index", row.index}});
  }
  return json{{"limit", to_json(p.limit)}, {"family_size", p.family_size}, {"rows", std::move(rows)}};
}

json to_json(const std::vector<SpectrumRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r{{"length", row.length}, {"status", row.verified ? "verified" : "absent"}};
    if (row.verified && row.witness) r["witness"] = *row.witness;
    out.push_back(std::move(r));
  }
  return out;
}

json to_json(const ObstructionReport& r) {
  json condition1;
  if (r.condition1) {
    condition1 = json{{"base", r.condition1->base},
                      {"witnesses", r.condition1->witnesses},
                      {"checked_equalities", r.condition1->checked_equalities}};
  }
  json condition2 = json::array();
  for (const auto& sample : r.condition2.samples) {
    condition2.push_back(json{{"sample", sample.sample},
                              {"counts", counts_to_json(sample.counts_at)},
                              {"stable", sample.stable}});
  }
  return json{{"M", r.m},
              {"condition1", std::move(condition1)},
              {"condition2", std::move(condition2)},
              {"spectrum", to_json(r.spectrum)},
              {"xi_convergence", to_json(r.xi_convergence)},
              {"conclusion", r.conclusion},
              {"budget", to_json(r.budget)}};
}

json to_json(const ZeroStepReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"x", row.x},
                        {"follower", row.follower},
                        {"witness", to_json(row.infinite_witness)},
                        {"in_inf", row.witness_in_inf},
                        {"length1_count", row.length1_count},
                        {"length1_verified", row.length1_verified}});
  }
  return json{{"x0", r.x0},
              {"rows", std::move(rows)},
              {"verified_length1", r.verified_length1},
              {"full_shift_verified_count", r.full_shift_verified_count},
              {"conclusion", r.conclusion},
              {"budget", to_json(r.budget)}};
}

json to_json(const ZLemmaReport& r) {
  json family = json::array();
  for (const auto& p : r.family) family.push_back(to_json(p));
  json z_points = json::array();
  for (const auto& p : r.z_points) z_points.push_back(to_json(p));
  return json{{"y", r.y},
              {"s0", r.s0},
              {"count", r.count},
              {"family", std::move(family)},
              {"z_points", std::move(z_points)},
              {"family_failures", r.family_failures},
              {"z_failures", r.z_failures},
              {"limit", r.limit_word},
              {"convergence", to_json(r.convergence)},
              {"limit_verdict", to_json(r.limit_verdict)},
              {"passed", r.passed}};
}

json to_json(const SigmaDiscontinuityReport& r) {
  json family = json::array();
  for (const auto& p : r.family) family.push_back(to_json(p));
  json shifted = json::array();
  for (const auto& p : r.shifted_family) shifted.push_back(to_json(p));
  return json{{"family", std::move(family)},
              {"shifted_family", std::move(shifted)},
              {"family_profile", to_json(r.family_profile)},
              {"shifted_profile", to_json(r.shifted_profile)},
              {"discontinuity", r.demonstrates_discontinuity()}};
}

}  // namespace shiftlab
