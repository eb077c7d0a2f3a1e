// End-to-end checks of the command line binary. The test runner passes the
// binary location through SHIFTLAB_CLI; without it these cases are skipped.
#include "doctest.h"
#include "shiftlab/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

const char* cli_path() { return std::getenv("SHIFTLAB_CLI"); }

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "shiftlab_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  CliResult result;
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string command =
      std::string(cli_path()) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

fs::path write_spec(const std::string& name, const std::string& body) {
  const fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << body;
  return p;
}

}  // namespace

TEST_CASE("cli end to end") {
  if (cli_path() == nullptr) {
    MESSAGE("SHIFTLAB_CLI not set; skipping CLI tests");
    return;
  }

  SUBCASE("verify-prop1 passes and is byte-deterministic") {
    const auto first = run_cli("verify-prop1 --m 1");
    CHECK(first.exit_code == 0);
    CHECK(first.out.find("overall: PASS") != std::string::npos);
    const auto second = run_cli("verify-prop1 --m 1");
    CHECK(first.out == second.out);
  }

  SUBCASE("verify-prop1 writes a schema-tagged JSON report that reparses") {
    const fs::path report = scratch_dir() / "prop1.json";
    const auto run = run_cli("verify-prop1 --m 2 --json " + report.string() + " --audit");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("audit: ok") != std::string::npos);
    const std::string first_text = slurp(report);
    const nlohmann::json j = nlohmann::json::parse(first_text);
    CHECK(j["schema"] == "shiftlab/1");
    CHECK(j["command"] == "verify-prop1");
    CHECK(j["M"] == 2);
    const auto again = run_cli("verify-prop1 --m 2 --json " + report.string());
    CHECK(again.exit_code == 0);
    CHECK(slurp(report) == first_text);
  }

  SUBCASE("zero-step passes with the expected singleton") {
    const auto run = run_cli("zero-step --x0 0 --audit");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("verified length-1 elements: {0}") != std::string::npos);
  }

  SUBCASE("sigma-demo and converge-demo pass") {
    CHECK(run_cli("sigma-demo").exit_code == 0);
    CHECK(run_cli("converge-demo --m 2 --audit").exit_code == 0);
  }

  SUBCASE("spectrum over a spec file") {
    const fs::path spec = write_spec("fel4.json",
        R"({"kind":"step","window":4,"predicate":{"kind":"first_equals_last"}})");
    const auto run = run_cli("spectrum --spec " + spec.string() + " --max-len 5 --audit");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("length 2: verified") != std::string::npos);
    CHECK(run.out.find("length 3: absent-up-to-budget") != std::string::npos);
  }

  SUBCASE("periodic over a spec file") {
    const fs::path spec = write_spec("fel3.json",
        R"({"kind":"step","window":3,"predicate":{"kind":"first_equals_last"}})");
    const auto run = run_cli("periodic --spec " + spec.string() +
                             " --period 2 --truncation 2 --audit");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find(": 4") != std::string::npos);
  }

  SUBCASE("member verdicts drive the exit code") {
    const fs::path spec = write_spec("fel3b.json",
        R"({"kind":"step","window":3,"predicate":{"kind":"first_equals_last"}})");
    const auto inside =
        run_cli("member --spec " + spec.string() + " --point '{\"kind\":\"ep\",\"per\":[0,5]}'");
    CHECK(inside.exit_code == 0);
    CHECK(inside.out.find("IN X^inf") != std::string::npos);
    const auto outside =
        run_cli("member --spec " + spec.string() +
                " --point '{\"kind\":\"ep\",\"per\":[0,1,1]}'");
    CHECK(outside.exit_code == 2);
    const auto unverified =
        run_cli("member --spec " + spec.string() + " --point '{\"kind\":\"finite\",\"word\":[0,5,0]}'");
    CHECK(unverified.exit_code == 2);
    CHECK(unverified.out.find("not verified up to budget") != std::string::npos);
  }

  SUBCASE("usage and input errors exit with 1") {
    CHECK(run_cli("verify-prop1 --m 0").exit_code == 1);
    CHECK(run_cli("verify-prop1").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("spectrum --spec /nonexistent.json --max-len 2").exit_code == 1);
    const fs::path bad = write_spec("bad.json", "{\"kind\":\"nope\"}");
    const auto run = run_cli("spectrum --spec " + bad.string() + " --max-len 2");
    CHECK(run.exit_code == 1);
    CHECK(run.err.find("error:") != std::string::npos);
    CHECK(run_cli("verify-prop1 --m 1 --threshold 1").exit_code == 1);
  }
}
