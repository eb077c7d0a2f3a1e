// shiftlab command line: budgeted verification of shift-space constructions
// over countably infinite alphabets. Exit codes: 0 when the expectations of
// the command hold, 2 when they fail, 1 on usage or input errors.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shiftlab/budget.hpp"
#include "shiftlab/convergence.hpp"
#include "shiftlab/counterexamples.hpp"
#include "shiftlab/core.hpp"
#include "shiftlab/json_io.hpp"
#include "shiftlab/search.hpp"
#include "shiftlab/spec.hpp"

namespace {

using nlohmann::json;
using namespace shiftlab;

constexpr const char* kSchema = "shiftlab/1";

struct CommonFlags {
  std::uint64_t truncation = 16;
  std::uint64_t threshold = 8;
  std::uint64_t period_bound = 8;
  std::uint64_t depth = 64;
  std::string json_path;
  bool audit = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--truncation", truncation, "symbols searched are {0..n-1}")
        ->capture_default_str();
    cmd->add_option("--threshold", threshold, "witness count standing in for 'infinitely many'")
        ->capture_default_str();
    cmd->add_option("--period-bound", period_bound, "max period of candidate continuations")
        ->capture_default_str();
    cmd->add_option("--depth", depth, "unrolling depth for cross-checks")->capture_default_str();
    cmd->add_option("--json", json_path, "write the JSON report to this path");
    cmd->add_flag("--audit", audit, "re-parse the report and re-verify embedded witnesses");
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.truncation = truncation;
    b.threshold = threshold;
    b.period_bound = period_bound;
    b.depth = depth;
    b.validate();
    return b;
  }
};

ShiftSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  json j;
  in >> j;
  return spec_from_json(j);
}

void emit_report(const CommonFlags& flags, const std::string& command, json report) {
  if (flags.json_path.empty()) return;
  report["schema"] = kSchema;
  report["command"] = command;
  std::ofstream out(flags.json_path);
  if (!out) throw std::runtime_error("cannot write JSON report to " + flags.json_path);
  out << report.dump(2) << '\n';
}

std::string counts_text(const std::vector<std::pair<std::size_t, std::size_t>>& counts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out << ' ';
    out << counts[i].first << "->" << counts[i].second;
  }
  return out.str();
}

void print_profile(const ConvergenceProfile& profile, const std::string& label) {
  std::cout << label << ": limit " << format_point(profile.limit) << ", family size "
            << profile.family_size << '\n';
  for (const auto& row : profile.rows) {
    std::cout << "  m=" << row.m << ": "
              << (row.passed ? "pass n0=" : "FAIL largest escape index=") << row.index << '\n';
  }
}

void print_spectrum(const std::vector<SpectrumRow>& rows) {
  for (const auto& row : rows) {
    std::cout << "  length " << row.length << ": ";
    if (row.verified) {
      std::cout << "verified, least witness " << format_word(*row.witness) << '\n';
    } else {
      std::cout << "absent-up-to-budget\n";
    }
  }
}

// Audit helpers: all of them re-read the emitted JSON and re-drive the
// verdicts through the library, returning the number of re-verified facts.

std::size_t audit_spectrum_rows(const json& rows, const ShiftSpec& spec,
                                const SearchBudget& budget) {
  std::size_t checked = 0;
  for (const auto& row : rows) {
    if (row.at("status").get<std::string>() != "verified") continue;
    Word witness;
    for (const auto& v : row.at("witness")) witness.push_back(v.get<Symbol>());
    if (witness.size() != row.at("length").get<std::size_t>()) {
      throw std::runtime_error("audit: spectrum witness length mismatch");
    }
    if (!in_fin(spec, witness, budget).verified) {
      throw std::runtime_error("audit: spectrum witness failed re-verification");
    }
    ++checked;
  }
  return checked;
}

std::size_t audit_profile(const json& j, const std::vector<Point>& family, const Point& limit) {
  const auto recomputed = convergence_profile(family, limit, j.at("rows").size());
  std::size_t checked = 0;
  for (std::size_t i = 0; i < recomputed.rows.size(); ++i) {
    const auto& row = j.at("rows").at(i);
    const bool passed = row.at("status").get<std::string>() == "pass";
    if (passed != recomputed.rows[i].passed ||
        row.at("index").get<std::size_t>() != recomputed.rows[i].index) {
      throw std::runtime_error("audit: convergence profile row mismatch");
    }
    ++checked;
  }
  return checked;
}

int run_verify_prop1(std::uint64_t m, const CommonFlags& flags) {
  const SearchBudget budget = flags.budget();
  const ObstructionReport report = obstruction_report(m, budget);

  std::cout << "verify-prop1: M=" << m << ", spec=step(first_equals_last, window=" << (m + 2)
            << ")\n";
  std::cout << "budget: truncation=" << budget.truncation << " threshold=" << budget.threshold
            << " period_bound=" << budget.period_bound << " depth=" << budget.depth << '\n';
  if (report.condition1) {
    std::cout << "condition (1): base " << format_word(report.condition1->base) << ", "
              << report.condition1->witnesses.size() << " witness symbols, "
              << report.condition1->checked_equalities << " cyclic checks each -> "
              << (report.condition1_ok ? "ok" : "below threshold") << '\n';
  } else {
    std::cout << "condition (1): no base found within budget\n";
  }
  for (const auto& sample : report.condition2.samples) {
    std::cout << "condition (2): sample " << format_word(sample.sample) << ": counts "
              << counts_text(sample.counts_at) << ' '
              << (sample.stable ? "STABLE" : "GROWING") << '\n';
  }
  if (report.condition2.analytic_single) {
    std::cout << "condition (2): analytic case, exactly one extension per window\n";
  }
  std::cout << "spectrum up to length " << (2 * m + 1) << ":\n";
  print_spectrum(report.spectrum);
  print_profile(report.xi_convergence, "xi-family convergence");
  std::cout << "conclusion: " << report.conclusion << '\n';
  std::cout << "overall: " << (report.passed() ? "PASS" : "FAIL") << '\n';

  json j = to_json(report);
  emit_report(flags, "verify-prop1", j);
  if (flags.audit) {
    const json replay = json::parse(j.dump());
    std::size_t checked = 0;
    const ShiftSpec spec = ShiftSpec::step(theorem_predicate(m));
    Word base;
    for (const auto& v : replay.at("condition1").at("base")) base.push_back(v.get<Symbol>());
    for (const auto& v : replay.at("condition1").at("witnesses")) {
      Word block = base;
      block.push_back(v.get<Symbol>());
      if (!in_inf(spec, Point::eventually_periodic({}, block))) {
        throw std::runtime_error("audit: condition (1) witness failed re-verification");
      }
      ++checked;
    }
    checked += audit_spectrum_rows(replay.at("spectrum"), spec, budget);
    checked += audit_profile(replay.at("xi_convergence"), report.xi_points,
                             Point::finite(base));
    std::cout << "audit: ok (" << checked << " facts re-verified)\n";
  }
  return report.passed() ? 0 : 2;
}

int run_zero_step(std::uint64_t x0, const CommonFlags& flags) {
  const SearchBudget budget = flags.budget();
  const ZeroStepReport report = zero_step_report(static_cast<Symbol>(x0), budget);

  std::cout << "zero-step: x0=" << x0 << ", spec=step(zero_step_example, window=2)\n";
  std::cout << "budget: truncation=" << budget.truncation << " threshold=" << budget.threshold
            << " period_bound=" << budget.period_bound << " depth=" << budget.depth << '\n';
  for (const auto& row : report.rows) {
    std::cout << "  x=" << row.x << ": follower " << row.follower << ", infinite witness "
              << format_point(row.infinite_witness) << (row.witness_in_inf ? "" : " (NOT in X^inf)")
              << ", length-1 count " << row.length1_count
              << (row.length1_verified ? " verified" : "") << '\n';
  }
  std::cout << "verified length-1 elements: {";
  for (std::size_t i = 0; i < report.verified_length1.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << report.verified_length1[i];
  }
  std::cout << "}\n";
  std::cout << "full-shift comparison: " << report.full_shift_verified_count
            << " verified length-1 elements\n";
  std::cout << "conclusion: " << report.conclusion << '\n';
  std::cout << "overall: " << (report.passed() ? "PASS" : "FAIL") << '\n';

  json j = to_json(report);
  emit_report(flags, "zero-step", j);
  if (flags.audit) {
    const json replay = json::parse(j.dump());
    const ShiftSpec spec = ShiftSpec::step(zero_step_predicate(static_cast<Symbol>(x0)));
    std::size_t checked = 0;
    for (const auto& row : replay.at("rows")) {
      const Point witness = point_from_json(row.at("witness"));
      if (!in_inf(spec, witness)) {
        throw std::runtime_error("audit: zero-step witness failed re-verification");
      }
      const auto verdict = in_fin(spec, {row.at("x").get<Symbol>()}, budget);
      if (verdict.verified != row.at("length1_verified").get<bool>()) {
        throw std::runtime_error("audit: zero-step length-1 verdict mismatch");
      }
      ++checked;
    }
    std::cout << "audit: ok (" << checked << " facts re-verified)\n";
  }
  return report.passed() ? 0 : 2;
}

int run_spectrum(const std::string& spec_path, std::uint64_t max_len, const CommonFlags& flags) {
  const SearchBudget budget = flags.budget();
  const ShiftSpec spec = load_spec(spec_path);
  const auto rows = length_spectrum(spec, max_len, budget);
  std::cout << "spectrum up to length " << max_len << ":\n";
  print_spectrum(rows);
  json j;
  j["spec"] = to_json(spec);
  j["budget"] = to_json(budget);
  j["spectrum"] = to_json(rows);
  emit_report(flags, "spectrum", j);
  if (flags.audit) {
    const json replay = json::parse(j.dump());
    const ShiftSpec again = spec_from_json(replay.at("spec"));
    const std::size_t checked = audit_spectrum_rows(replay.at("spectrum"), again, budget);
    std::cout << "audit: ok (" << checked << " facts re-verified)\n";
  }
  return 0;
}

int run_periodic(const std::string& spec_path, std::uint64_t period, const CommonFlags& flags) {
  const SearchBudget budget = flags.budget();
  const ShiftSpec spec = load_spec(spec_path);
  const auto points = periodic_points(spec, period, budget);
  std::cout << "periodic points with shift^" << period << " fixed, truncation "
            << budget.truncation << ": " << points.size() << '\n';
  for (const auto& p : points) std::cout << "  " << format_point(p) << '\n';
  json j;
  j["spec"] = to_json(spec);
  j["budget"] = to_json(budget);
  j["period"] = period;
  json arr = json::array();
  for (const auto& p : points) arr.push_back(to_json(p));
  j["points"] = std::move(arr);
  emit_report(flags, "periodic", j);
  if (flags.audit) {
    const json replay = json::parse(j.dump());
    const ShiftSpec again = spec_from_json(replay.at("spec"));
    std::size_t checked = 0;
    for (const auto& pj : replay.at("points")) {
      Point p = point_from_json(pj);
      Point rotated = p;
      for (std::uint64_t i = 0; i < period; ++i) rotated = rotated.shifted();
      if (rotated != p || !in_inf(again, p) || !allowed(again, p.prefix(budget.depth))) {
        throw std::runtime_error("audit: periodic point failed re-verification");
      }
      ++checked;
    }
    std::cout << "audit: ok (" << checked << " facts re-verified)\n";
  }
  return 0;
}

int run_member(const std::string& spec_path, const std::string& point_json,
               const CommonFlags& flags) {
  const SearchBudget budget = flags.budget();
  const ShiftSpec spec = load_spec(spec_path);
  const Point point = point_from_json(json::parse(point_json));
  const MembershipResult result = membership(spec, point, budget);
  bool positive = false;
  json j;
  j["spec"] = to_json(spec);
  j["budget"] = to_json(budget);
  j["point"] = to_json(point);
  if (const bool* exact = std::get_if<bool>(&result)) {
    positive = *exact;
    std::cout << "member: " << format_point(point) << " is "
              << (positive ? "IN" : "NOT in") << " X^inf (exact)\n";
    j["exact"] = true;
    j["in"] = positive;
  } else {
    const auto& verdict = std::get<WitnessVerdict>(result);
    positive = verdict.verified;
    std::cout << "member: " << format_point(point) << " is "
              << (positive ? "verified" : "not verified up to budget")
              << " in X^fin; counts " << counts_text(verdict.counts_at) << '\n';
    j["exact"] = false;
    j["verdict"] = to_json(verdict);
  }
  emit_report(flags, "member", j);
  if (flags.audit) {
    const json replay = json::parse(j.dump());
    const ShiftSpec again = spec_from_json(replay.at("spec"));
    const Point p2 = point_from_json(replay.at("point"));
    const MembershipResult redo = membership(again, p2, budget);
    const bool redo_positive = std::holds_alternative<bool>(redo)
                                   ? std::get<bool>(redo)
                                   : std::get<WitnessVerdict>(redo).verified;
    if (redo_positive != positive) throw std::runtime_error("audit: membership verdict changed");
    std::cout << "audit: ok (1 fact re-verified)\n";
  }
  return positive ? 0 : 2;
}

int run_converge_demo(std::uint64_t m, const CommonFlags& flags) {
  const SearchBudget budget = flags.budget();
  const Word base(m, 0);
  const auto family = xi_family(m, base, 2 * budget.threshold);
  const ShiftSpec spec = ShiftSpec::step(theorem_predicate(m));
  bool members_ok = true;
  for (const auto& p : family) {
    Point rotated = p;
    for (std::size_t i = 0; i <= m; ++i) rotated = rotated.shifted();
    members_ok = members_ok && rotated == p && in_inf(spec, p);
  }
  const auto profile = convergence_profile(family, Point::finite(base), budget.threshold);
  std::cout << "converge-demo: xi family over base " << format_word(base) << ", "
            << family.size() << " members, each (M+1)-periodic and in X^inf: "
            << (members_ok ? "ok" : "FAIL") << '\n';
  print_profile(profile, "xi-family convergence");
  const bool pass = members_ok && profile.all_passed();
  std::cout << "overall: " << (pass ? "PASS" : "FAIL") << '\n';
  json j;
  j["m"] = m;
  j["budget"] = to_json(budget);
  json arr = json::array();
  for (const auto& p : family) arr.push_back(to_json(p));
  j["family"] = std::move(arr);
  j["profile"] = to_json(profile);
  emit_report(flags, "converge-demo", j);
  if (flags.audit) {
    const json replay = json::parse(j.dump());
    std::vector<Point> again;
    for (const auto& pj : replay.at("family")) again.push_back(point_from_json(pj));
    const std::size_t checked = audit_profile(replay.at("profile"), again, Point::finite(base));
    std::cout << "audit: ok (" << checked << " facts re-verified)\n";
  }
  return pass ? 0 : 2;
}

int run_sigma_demo(const CommonFlags& flags) {
  const SigmaDiscontinuityReport report = sigma_discontinuity_demo();
  std::cout << "sigma-demo: family x_j = (j-1) 0 0 0 ... for j=1.." << report.family.size()
            << "; shifted family is constant " << format_point(report.shifted_family.front())
            << '\n';
  print_profile(report.family_profile, "x_j -> e");
  print_profile(report.shifted_profile, "sigma(x_j) -> sigma(e) = e");
  const bool pass = report.demonstrates_discontinuity();
  std::cout << "shift map discontinuity at the empty sequence: "
            << (pass ? "demonstrated" : "NOT demonstrated") << '\n';
  std::cout << "overall: " << (pass ? "PASS" : "FAIL") << '\n';
  json j = to_json(report);
  emit_report(flags, "sigma-demo", j);
  if (flags.audit) {
    const json replay = json::parse(j.dump());
    std::vector<Point> family;
    for (const auto& pj : replay.at("family")) family.push_back(point_from_json(pj));
    std::size_t checked = audit_profile(replay.at("family_profile"), family, Point::empty());
    std::vector<Point> shifted;
    for (const auto& pj : replay.at("shifted_family")) shifted.push_back(point_from_json(pj));
    checked += audit_profile(replay.at("shifted_profile"), shifted, Point::empty());
    std::cout << "audit: ok (" << checked << " facts re-verified)\n";
  }
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: decision procedures for shift spaces over infinite alphabets"};
  app.require_subcommand(1);

  std::uint64_t m = 1;
  std::uint64_t x0 = 0;
  std::uint64_t max_len = 4;
  std::uint64_t period = 1;
  std::string spec_path;
  std::string point_json;

  CommonFlags prop1_flags, zero_flags, spectrum_flags, periodic_flags, member_flags,
      converge_flags, sigma_flags;

  auto* prop1 = app.add_subcommand(
      "verify-prop1", "replay the (M+1)-step vs M-step obstruction for the built-in predicate");
  prop1->add_option("--m", m, "step parameter M >= 1")->required()->check(CLI::PositiveNumber);
  prop1_flags.attach(prop1);

  auto* zero = app.add_subcommand("zero-step", "replay the 1-step vs 0-step separation");
  zero->add_option("--x0", x0, "anchor symbol")->required();
  zero_flags.attach(zero);

  auto* spectrum = app.add_subcommand("spectrum", "length spectrum of a spec file");
  spectrum->add_option("--spec", spec_path, "spec JSON path")->required();
  spectrum->add_option("--max-len", max_len, "largest length to report")->required();
  spectrum_flags.attach(spectrum);

  auto* periodic = app.add_subcommand("periodic", "periodic points of a spec file");
  periodic->add_option("--spec", spec_path, "spec JSON path")->required();
  periodic->add_option("--period", period, "shift power q >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  periodic_flags.attach(periodic);

  auto* member = app.add_subcommand("member", "membership of one point in a spec file");
  member->add_option("--spec", spec_path, "spec JSON path")->required();
  member->add_option("--point", point_json, "point as inline JSON")->required();
  member_flags.attach(member);

  auto* converge = app.add_subcommand("converge-demo", "xi-family convergence certificate");
  converge->add_option("--m", m, "step parameter M >= 1")->required()->check(CLI::PositiveNumber);
  converge_flags.attach(converge);

  auto* sigma = app.add_subcommand("sigma-demo", "shift-map discontinuity at the empty sequence");
  sigma_flags.attach(sigma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (prop1->parsed()) return run_verify_prop1(m, prop1_flags);
    if (zero->parsed()) return run_zero_step(x0, zero_flags);
    if (spectrum->parsed()) return run_spectrum(spec_path, max_len, spectrum_flags);
    if (periodic->parsed()) return run_periodic(spec_path, period, periodic_flags);
    if (member->parsed()) return run_member(spec_path, point_json, member_flags);
    if (converge->parsed()) return run_converge_demo(m, converge_flags);
    if (sigma->parsed()) return run_sigma_demo(sigma_flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "error: no command\n";
  return 1;
}
