#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "lhca/analysis.hpp"
#include "lhca/ca.hpp"
#include "lhca/diffeq.hpp"
#include "lhca/generators.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(LHCA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("charpoly matches the library") {
  RunResult r = run_cli("charpoly 10000");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "x^5+x^4+x^2+x+1\n");
  CHECK(r.output ==
        lhca::ca::char_poly(lhca::ca::RuleVector::parse("10000")).to_string() + "\n");
}

TEST_CASE("concat doubles twice") {
  RunResult r = run_cli("concat 10000 --times 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "10001100000000110001\n");
}

TEST_CASE("synth prints the automaton pair") {
  RunResult r = run_cli("synth x^3+x^2+1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "001\n100\n");
}

TEST_CASE("run prints a column") {
  RunResult r = run_cli("run 100 101 --cell 1 --len 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1110100\n");
}

TEST_CASE("bm plain and json output") {
  RunResult plain = run_cli("bm --bits 11101001110100");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output == "lc=3 poly=x^3+x^2+1\n");

  RunResult with_json = run_cli("bm --bits 11101001110100 --json");
  CHECK(with_json.exit_code == 0);
  json doc = json::parse(with_json.output);
  CHECK(doc["command"] == "bm");
  CHECK(doc["inputs"]["bits"] == "11101001110100");
  CHECK(doc["outputs"]["lc"] == 3);
  CHECK(doc["outputs"]["poly"] == "x^3+x^2+1");
  CHECK(doc.contains("artifact_version"));

  // Identical invocations must produce byte-identical documents.
  CHECK(run_cli("bm --bits 11101001110100 --json").output == with_json.output);
}

TEST_CASE("period") {
  RunResult r = run_cli("period --bits 11101001110100");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "7\n");
}

TEST_CASE("cycles json report") {
  RunResult r = run_cli("cycles 1000110001 --json");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.output);
  CHECK(doc["outputs"]["L"] == 10);

  lhca::ca::CycleCensus census =
      lhca::ca::cycle_census(lhca::ca::RuleVector::parse("1000110001"));
  const json& cycles = doc["outputs"]["cycles"];
  REQUIRE(cycles.size() == census.groups.size());
  for (size_t i = 0; i < census.groups.size(); ++i) {
    CHECK(cycles[i]["length"] == census.groups[i].length);
    CHECK(cycles[i]["count"] == census.groups[i].count);
    CHECK(cycles[i]["symmetry"]["doubly_symmetric"] ==
          census.groups[i].symmetry.at(lhca::ca::SymmetryClass::doubly_symmetric));
  }

  // Thread count must not change a single byte of the report.
  CHECK(run_cli("cycles 1000110001 --threads 4 --json").output ==
        run_cli("cycles 1000110001 --threads 1 --json").output);
}

TEST_CASE("solve and profile") {
  RunResult r = run_cli("solve --poly x^3+x^2+1 --mult 1 --coeffs 1 --len 7");
  CHECK(r.exit_code == 0);
  lhca::diffeq::DifferenceEquation eq(lhca::gf2::BinaryPolynomial::parse("x^3+x^2+1"), 1);
  auto coeffs = lhca::diffeq::SolutionCoeffs::from_masks(eq, {1});
  CHECK(r.output == lhca::diffeq::solution_sequence(eq, coeffs, 7).to_string() + "\n");

  RunResult prof = run_cli("profile --poly x^5+x^4+x^2+x+1 --mult 4 --coeffs 0,0,1,0");
  CHECK(prof.exit_code == 0);
  CHECK(prof.output == "period=124 lc=15 class_index=2 count_in_class=256\n");
}

TEST_CASE("shrink and linearize round trip") {
  const std::string shrink_args =
      "--control-poly x^3+x^2+1 --control-seed 111 "
      "--data-poly x^5+x^4+x^2+x+1 --data-seed 00001 --len 248";
  RunResult ks = run_cli("shrink " + shrink_args);
  CHECK(ks.exit_code == 0);
  std::string bits = ks.output.substr(0, ks.output.size() - 1);
  CHECK(bits.size() == 248);

  RunResult lin = run_cli("linearize --bits " + bits + " --json");
  CHECK(lin.exit_code == 0);
  json doc = json::parse(lin.output);
  CHECK(doc["outputs"]["verified_period"] == 124);
  std::string rule = doc["outputs"]["rule"];
  std::string state = doc["outputs"]["initial_state"];
  int cell = doc["outputs"]["read_cell"];
  CHECK(lhca::ca::run_column(lhca::ca::RuleVector::parse(rule),
                             lhca::ca::CAState::parse(state), cell, 248)
            .to_string() == bits);
}

TEST_CASE("domain errors exit 1 with a diagnostic") {
  RunResult bad_bits = run_cli("charpoly 10a02");
  CHECK(bad_bits.exit_code == 1);
  CHECK(bad_bits.output.find("error:") != std::string::npos);

  RunResult not_bijective = run_cli("cycles 000");
  CHECK(not_bijective.exit_code == 1);
  CHECK(not_bijective.output.find("bijection") != std::string::npos);

  RunResult outside = run_cli("linearize --bits 00000000");
  CHECK(outside.exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("charpoly").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify-paper reports every check") {
  RunResult r = run_cli("verify-paper");
  CHECK(r.exit_code == 0);
  size_t passes = 0;
  size_t pos = 0;
  while ((pos = r.output.find("PASS ", pos)) != std::string::npos) {
    ++passes;
    pos += 5;
  }
  CHECK(passes == 9);
  CHECK(r.output.find("FAIL") == std::string::npos);
}
