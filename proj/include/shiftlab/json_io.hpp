#pragma once

#include "json.hpp"
#include "shiftlab/budget.hpp"
#include "shiftlab/convergence.hpp"
#include "shiftlab/counterexamples.hpp"
#include "shiftlab/core.hpp"
#include "shiftlab/cylinder.hpp"
#include "shiftlab/search.hpp"
#include "shiftlab/spec.hpp"

namespace shiftlab {

/// Wire formats:
///   point     {"kind":"empty"} | {"kind":"finite","word":[..]} |
///             {"kind":"ep","pre":[..],"per":[..]}
///   cylinder  {"base":[..],"forbidden":[..]}
///   spec      {"kind":"full"} | {"kind":"forbidden","words":[[..]]} |
///             {"kind":"step","window":w,"predicate":{..}}
///   predicate {"kind":"first_equals_last"} | {"kind":"zero_step_example","x0":k}
///             | {"kind":"table","support":s,"entries":[{"window":[..],"value":b}],
///                "default":b}
///   budget    {"truncation":n,"threshold":t,"period_bound":p,"depth":d}
/// Parsers throw std::invalid_argument on malformed input.

nlohmann::json to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Cylinder& c);
Cylinder cylinder_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchBudget& b);
SearchBudget budget_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WindowPredicate& p);
WindowPredicate predicate_from_json(const nlohmann::json& j, std::size_t window);

nlohmann::json to_json(const ShiftSpec& s);
ShiftSpec spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WitnessVerdict& v);
nlohmann::json to_json(const ConvergenceProfile& p);
nlohmann::json to_json(const std::vector<SpectrumRow>& rows);
nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const ZeroStepReport& r);
nlohmann::json to_json(const ZLemmaReport& r);
nlohmann::json to_json(const SigmaDiscontinuityReport& r);

}  // namespace shiftlab
