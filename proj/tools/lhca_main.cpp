// Command-line front end: every subcommand is a thin adapter over the library;
// no arithmetic lives here. Plain text by default, a deterministic JSON report
// document with --json.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lhca/analysis.hpp"
#include "lhca/bitseq.hpp"
#include "lhca/ca.hpp"
#include "lhca/diffeq.hpp"
#include "lhca/generators.hpp"
#include "lhca/gf2.hpp"
#include "lhca/verify.hpp"
#include "lhca/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using lhca::BitSequence;
namespace ca = lhca::ca;
namespace gf2 = lhca::gf2;

void emit(bool as_json, const std::string& command, const ordered_json& inputs,
          const ordered_json& outputs, const std::string& plain) {
  if (as_json) {
    ordered_json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["outputs"] = outputs;
    doc["artifact_version"] = std::string(lhca::kArtifactVersion);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << plain << "\n";
  }
}

std::vector<uint64_t> parse_hex_list(const std::string& text) {
  std::vector<uint64_t> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw std::invalid_argument("coefficient list: empty entry");
    values.push_back(std::stoull(token, nullptr, 16));
  }
  if (values.empty()) throw std::invalid_argument("coefficient list: no entries");
  return values;
}

ordered_json symmetry_json(const ca::CycleGroup& g) {
  ordered_json sym;
  for (auto cls : {ca::SymmetryClass::doubly_symmetric, ca::SymmetryClass::symmetric,
                   ca::SymmetryClass::repetitive, ca::SymmetryClass::other})
    sym[std::string(ca::to_string(cls))] = g.symmetry.at(cls);
  return sym;
}

struct SolveArgs {
  std::string poly;
  uint64_t mult = 1;
  std::string coeffs;
  uint64_t len = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear hybrid 90/150 cellular automata as difference-equation solvers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lhca::kArtifactVersion));

  bool as_json = false;

  // charpoly
  auto* cmd_charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a rule vector");
  std::string arg_rule;
  cmd_charpoly->add_option("rule", arg_rule, "Rule vector bits, leftmost = d_1")->required();
  cmd_charpoly->add_flag("--json", as_json, "Emit a JSON report document");

  // synth
  auto* cmd_synth = app.add_subcommand("synth", "Automaton pair for a primitive polynomial");
  std::string arg_poly;
  cmd_synth->add_option("poly", arg_poly, "Polynomial (sparse form or hex mask)")->required();
  cmd_synth->add_flag("--json", as_json);

  // concat
  auto* cmd_concat = app.add_subcommand("concat", "Concatenate a rule vector with its reversal");
  std::string concat_rule;
  uint32_t concat_times = 1;
  cmd_concat->add_option("rule", concat_rule, "Rule vector bits")->required();
  cmd_concat->add_option("--times", concat_times, "Number of doublings (default 1)");
  cmd_concat->add_flag("--json", as_json);

  // run
  auto* cmd_run = app.add_subcommand("run", "Column sequence of one cell");
  std::string run_rule, run_state;
  int run_cell = 1;
  uint64_t run_len = 0;
  cmd_run->add_option("rule", run_rule, "Rule vector bits")->required();
  cmd_run->add_option("state", run_state, "Initial state bits")->required();
  cmd_run->add_option("--cell", run_cell, "1-based cell index (default 1)");
  cmd_run->add_option("--len", run_len, "Number of steps")->required();
  cmd_run->add_flag("--json", as_json);

  // cycles
  auto* cmd_cycles = app.add_subcommand("cycles", "Full cycle census of the state space");
  std::string cycles_rule;
  unsigned cycles_threads = 1;
  cmd_cycles->add_option("rule", cycles_rule, "Rule vector bits")->required();
  cmd_cycles->add_option("--threads", cycles_threads, "Worker threads (identical output)");
  cmd_cycles->add_flag("--json", as_json);

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "Closed-form solution of a difference equation");
  SolveArgs solve_args;
  cmd_solve->add_option("--poly", solve_args.poly, "Primitive base polynomial")->required();
  cmd_solve->add_option("--mult", solve_args.mult, "Root multiplicity p")->required();
  cmd_solve->add_option("--coeffs", solve_args.coeffs, "Comma-separated hex masks A_0..A_{p-1}")
      ->required();
  cmd_solve->add_option("--len", solve_args.len, "Number of terms")->required();
  cmd_solve->add_flag("--json", as_json);

  // profile
  auto* cmd_profile = app.add_subcommand("profile", "Period / linear complexity of a solution");
  SolveArgs profile_args;
  cmd_profile->add_option("--poly", profile_args.poly, "Primitive base polynomial")->required();
  cmd_profile->add_option("--mult", profile_args.mult, "Root multiplicity p")->required();
  cmd_profile->add_option("--coeffs", profile_args.coeffs, "Comma-separated hex masks")->required();
  cmd_profile->add_flag("--json", as_json);

  // bm
  auto* cmd_bm = app.add_subcommand("bm", "Berlekamp-Massey linear complexity");
  std::string bm_bits;
  cmd_bm->add_option("--bits", bm_bits, "Bit string")->required();
  cmd_bm->add_flag("--json", as_json);

  // period
  auto* cmd_period = app.add_subcommand("period", "Minimal period of a bit window");
  std::string period_bits;
  cmd_period->add_option("--bits", period_bits, "Bit string")->required();
  cmd_period->add_flag("--json", as_json);

  // shrink
  auto* cmd_shrink = app.add_subcommand("shrink", "Shrinking-generator keystream");
  std::string shrink_cpoly, shrink_cseed, shrink_dpoly, shrink_dseed;
  uint64_t shrink_len = 0;
  cmd_shrink->add_option("--control-poly", shrink_cpoly, "Control polynomial")->required();
  cmd_shrink->add_option("--control-seed", shrink_cseed, "Control seed bits")->required();
  cmd_shrink->add_option("--data-poly", shrink_dpoly, "Data polynomial")->required();
  cmd_shrink->add_option("--data-seed", shrink_dseed, "Data seed bits")->required();
  cmd_shrink->add_option("--len", shrink_len, "Keystream bits to emit")->required();
  cmd_shrink->add_flag("--json", as_json);

  // linearize
  auto* cmd_lin = app.add_subcommand("linearize", "Cellular-automaton model of a keystream");
  std::string lin_bits;
  cmd_lin->add_option("--bits", lin_bits, "Keystream window")->required();
  cmd_lin->add_flag("--json", as_json);

  // verify-paper
  auto* cmd_verify =
      app.add_subcommand("verify-paper", "Run the built-in verification suite (one line per check)");
  uint64_t verify_seed = lhca::verify::kDefaultSeed;
  cmd_verify->add_option("--seed", verify_seed, "Seed for the randomized property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_charpoly) {
      ca::RuleVector rule = ca::RuleVector::parse(arg_rule);
      std::string poly = ca::char_poly(rule).to_string();
      emit(as_json, "charpoly", {{"rule", rule.to_string()}}, {{"poly", poly}}, poly);
    } else if (*cmd_synth) {
      gf2::BinaryPolynomial p = gf2::BinaryPolynomial::parse(arg_poly);
      auto [rule, rev] = ca::synthesize(p);
      emit(as_json, "synth", {{"poly", p.to_string()}},
           {{"rule", rule.to_string()}, {"reversal", rev.to_string()}},
           rule.to_string() + "\n" + rev.to_string());
    } else if (*cmd_concat) {
      ca::RuleVector rule = ca::RuleVector::parse(concat_rule);
      ca::RuleVector out = rule;
      for (uint32_t i = 0; i < concat_times; ++i) out = ca::concat_double(out);
      emit(as_json, "concat", {{"rule", rule.to_string()}, {"times", concat_times}},
           {{"rule", out.to_string()}}, out.to_string());
    } else if (*cmd_run) {
      ca::RuleVector rule = ca::RuleVector::parse(run_rule);
      ca::CAState s0 = ca::CAState::parse(run_state);
      BitSequence column = ca::run_column(rule, s0, run_cell, run_len);
      emit(as_json, "run",
           {{"rule", rule.to_string()},
            {"state", s0.to_string()},
            {"cell", run_cell},
            {"len", run_len}},
           {{"bits", column.to_string()}}, column.to_string());
    } else if (*cmd_cycles) {
      ca::RuleVector rule = ca::RuleVector::parse(cycles_rule);
      ca::CycleCensus census = ca::cycle_census(rule, cycles_threads);
      ordered_json cycles = ordered_json::array();
      std::string plain =
          "L=" + std::to_string(census.L) + " total_states=" + std::to_string(census.total_states);
      for (const auto& g : census.groups) {
        cycles.push_back(
            {{"length", g.length}, {"count", g.count}, {"symmetry", symmetry_json(g)}});
        plain += "\nlength=" + std::to_string(g.length) + " count=" + std::to_string(g.count);
        for (auto cls : {ca::SymmetryClass::doubly_symmetric, ca::SymmetryClass::symmetric,
                         ca::SymmetryClass::repetitive, ca::SymmetryClass::other})
          plain += " " + std::string(ca::to_string(cls)) + "=" + std::to_string(g.symmetry.at(cls));
      }
      emit(as_json, "cycles", {{"rule", rule.to_string()}, {"threads", cycles_threads}},
           {{"L", census.L}, {"cycles", cycles}}, plain);
    } else if (*cmd_solve) {
      lhca::diffeq::DifferenceEquation eq(gf2::BinaryPolynomial::parse(solve_args.poly),
                                          solve_args.mult);
      auto coeffs =
          lhca::diffeq::SolutionCoeffs::from_masks(eq, parse_hex_list(solve_args.coeffs));
      BitSequence bits = lhca::diffeq::solution_sequence(eq, coeffs, solve_args.len);
      emit(as_json, "solve",
           {{"poly", eq.base().to_string()},
            {"mult", eq.multiplicity()},
            {"coeffs", solve_args.coeffs},
            {"len", solve_args.len}},
           {{"bits", bits.to_string()}}, bits.to_string());
    } else if (*cmd_profile) {
      lhca::diffeq::DifferenceEquation eq(gf2::BinaryPolynomial::parse(profile_args.poly),
                                          profile_args.mult);
      auto coeffs =
          lhca::diffeq::SolutionCoeffs::from_masks(eq, parse_hex_list(profile_args.coeffs));
      lhca::diffeq::SolutionProfile prof = lhca::diffeq::profile(eq, coeffs);
      uint64_t count = lhca::diffeq::count_solution_classes(eq, prof.class_index);
      emit(as_json, "profile",
           {{"poly", eq.base().to_string()},
            {"mult", eq.multiplicity()},
            {"coeffs", profile_args.coeffs}},
           {{"period", prof.period},
            {"lc", prof.linear_complexity},
            {"class_index", prof.class_index},
            {"count_in_class", count}},
           "period=" + std::to_string(prof.period) + " lc=" + std::to_string(prof.linear_complexity) +
               " class_index=" + std::to_string(prof.class_index) +
               " count_in_class=" + std::to_string(count));
    } else if (*cmd_bm) {
      auto lp = lhca::analysis::berlekamp_massey(BitSequence::parse(bm_bits));
      emit(as_json, "bm", {{"bits", bm_bits}},
           {{"lc", lp.lc}, {"poly", lp.minimal_poly.to_string()}},
           "lc=" + std::to_string(lp.lc) + " poly=" + lp.minimal_poly.to_string());
    } else if (*cmd_period) {
      uint64_t period = lhca::analysis::minimal_period(BitSequence::parse(period_bits));
      emit(as_json, "period", {{"bits", period_bits}}, {{"period", period}},
           std::to_string(period));
    } else if (*cmd_shrink) {
      lhca::generators::ShrinkingConfig cfg{
          lhca::generators::LFSRConfig(gf2::BinaryPolynomial::parse(shrink_cpoly),
                                       BitSequence::parse(shrink_cseed)),
          lhca::generators::LFSRConfig(gf2::BinaryPolynomial::parse(shrink_dpoly),
                                       BitSequence::parse(shrink_dseed)),
      };
      BitSequence bits = lhca::generators::shrink_keystream(cfg, shrink_len);
      emit(as_json, "shrink",
           {{"control_poly", cfg.control.poly().to_string()},
            {"control_seed", cfg.control.state().to_string()},
            {"data_poly", cfg.data.poly().to_string()},
            {"data_seed", cfg.data.state().to_string()},
            {"len", shrink_len}},
           {{"bits", bits.to_string()}}, bits.to_string());
    } else if (*cmd_lin) {
      BitSequence keystream = BitSequence::parse(lin_bits);
      lhca::generators::CAModel model = lhca::generators::linearize(keystream);
      uint64_t period = lhca::generators::model_period(model);
      emit(as_json, "linearize", {{"bits", lin_bits}},
           {{"rule", model.rule.to_string()},
            {"initial_state", model.initial_state.to_string()},
            {"read_cell", model.read_cell},
            {"verified_period", period}},
           "rule=" + model.rule.to_string() + " initial_state=" + model.initial_state.to_string() +
               " read_cell=" + std::to_string(model.read_cell) +
               " verified_period=" + std::to_string(period));
    } else if (*cmd_verify) {
      bool all_pass = true;
      for (const auto& r : lhca::verify::run_all(verify_seed)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
