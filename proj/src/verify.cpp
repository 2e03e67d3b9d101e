#include "lhca/verify.hpp"

#include <array>
#include <random>

#include "lhca/analysis.hpp"
#include "lhca/ca.hpp"
#include "lhca/diffeq.hpp"
#include "lhca/generators.hpp"
#include "lhca/gf2.hpp"

namespace lhca::verify {

namespace {

using gf2::BinaryPolynomial;

class Check {
 public:
  explicit Check(std::string name) : result_{std::move(name), true, ""} {}

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    result_.pass = false;
    if (!result_.detail.empty()) result_.detail += "; ";
    result_.detail += what;
  }

  CheckResult finish(const std::string& pass_detail) {
    if (result_.pass) result_.detail = pass_detail;
    return result_;
  }

  CheckResult finish_exception(const std::string& what) {
    result_.pass = false;
    result_.detail = "exception: " + what;
    return result_;
  }

 private:
  CheckResult result_;
};

const ca::RuleVector kDelta3{1, 0, 0};
const ca::RuleVector kDelta3Rev{0, 0, 1};
const ca::RuleVector kDelta5{1, 0, 0, 0, 0};

BinaryPolynomial p3() { return BinaryPolynomial::parse("x^3+x^2+1"); }
BinaryPolynomial p5() { return BinaryPolynomial::parse("x^5+x^4+x^2+x+1"); }

CheckResult check_table1() {
  Check c("table1-state-rows-and-pn-column");
  // Seven successive states of the reversal pair, frozen reference rows.
  const std::array<const char*, 7> left = {"101", "100", "110", "011", "111", "001", "010"};
  const std::array<const char*, 7> right = {"110", "111", "100", "010", "101", "001", "011"};
  ca::CAState s = ca::CAState::parse(left[0]);
  ca::CAState t = ca::CAState::parse(right[0]);
  for (size_t row = 0; row < 7; ++row) {
    c.expect(s.to_string() == left[row], "left automaton row " + std::to_string(row) + " is " +
                                             s.to_string() + ", want " + left[row]);
    c.expect(t.to_string() == right[row], "right automaton row " + std::to_string(row) + " is " +
                                              t.to_string() + ", want " + right[row]);
    s = ca::step(kDelta3, s);
    t = ca::step(kDelta3Rev, t);
  }
  const std::string pn = "1110100";
  c.expect(ca::run_column(kDelta3, ca::CAState::parse(left[0]), 1, 7).to_string() == pn,
           "left cell-1 column is not " + pn);
  c.expect(ca::run_column(kDelta3Rev, ca::CAState::parse(right[0]), 1, 7).to_string() == pn,
           "right cell-1 column is not " + pn);
  return c.finish("both automata walk the reference rows; cell-1 columns equal " + pn);
}

CheckResult check_char_polys() {
  Check c("characteristic-polynomials");
  c.expect(ca::char_poly(kDelta3) == p3(), "char poly of 100 is " + ca::char_poly(kDelta3).to_string());
  c.expect(ca::char_poly(kDelta5) == p5(), "char poly of 10000 is " + ca::char_poly(kDelta5).to_string());
  return c.finish("100 -> x^3+x^2+1, 10000 -> x^5+x^4+x^2+x+1");
}

CheckResult check_theorem1() {
  Check c("concatenation-to-multiplicity-4");
  ca::RuleVector delta20 = ca::concat_to_multiplicity(kDelta5, 4);
  c.expect(delta20.to_string() == "10001100000000110001",
           "concatenated rule is " + delta20.to_string());
  BinaryPolynomial expected = p5() * p5() * p5() * p5();
  c.expect(ca::char_poly(delta20) == expected, "char poly is not P^4");
  return c.finish("rule 10001100000000110001 with characteristic polynomial P(x)^4");
}

CheckResult check_census() {
  Check c("cycle-census-2^20");
  ca::CycleCensus census = ca::cycle_census(ca::concat_to_multiplicity(kDelta5, 4));
  c.expect(census.total_states == 1048576, "total states != 2^20");
  c.expect(census.groups.size() == 4, "census has " + std::to_string(census.groups.size()) +
                                          " cycle lengths, want 4");
  const ca::CycleGroup* fixed = census.find_length(1);
  const ca::CycleGroup* c31 = census.find_length(31);
  const ca::CycleGroup* c62 = census.find_length(62);
  const ca::CycleGroup* c124 = census.find_length(124);
  c.expect(fixed && fixed->count == 1, "want exactly one fixed point");
  c.expect(fixed && fixed->symmetry.at(ca::SymmetryClass::doubly_symmetric) == 1,
           "the fixed point (zero state) is doubly symmetric");
  c.expect(c31 && c31->count == 1, "want one cycle of length 31");
  c.expect(c31 && c31->symmetry.at(ca::SymmetryClass::doubly_symmetric) == 31,
           "the 31-cycle must hold all 31 nonzero doubly symmetric states");
  c.expect(c62 && c62->count == 16, "want 16 cycles of length 62");
  c.expect(c62 && c62->symmetry.at(ca::SymmetryClass::symmetric) == 992,
           "the 62-cycles must hold the 992 symmetric states");
  c.expect(c124 && c124->count == 8448, "want 8448 cycles of length 124");
  c.expect(c124 && c124->symmetry.at(ca::SymmetryClass::repetitive) == 992,
           "the 124-cycles must hold the 992 strictly repetitive states");
  uint64_t covered = 0;
  for (const auto& g : census.groups) covered += g.length * g.count;
  c.expect(covered == 1048576, "cycle lengths x counts do not sum to 2^20");
  return c.finish("1 fixed point + 1x31 + 16x62 + 8448x124 covering 1048576 states");
}

CheckResult check_lc_ladder() {
  Check c("linear-complexity-ladder");
  diffeq::DifferenceEquation eq(p5(), 4);
  for (int cls = 0; cls < 4; ++cls) {
    std::vector<uint64_t> masks(4, 0);
    masks[static_cast<size_t>(cls)] = 1;
    auto coeffs = diffeq::SolutionCoeffs::from_masks(eq, masks);
    BitSequence window = diffeq::solution_sequence(eq, coeffs, 496);
    analysis::LinearProfile lp = analysis::berlekamp_massey(window);
    int want_lc = 5 * (cls + 1);
    c.expect(lp.lc == want_lc, "class " + std::to_string(cls) + " has lc " +
                                   std::to_string(lp.lc) + ", want " + std::to_string(want_lc));
    c.expect(lp.minimal_poly == gf2::pow(p5(), static_cast<uint64_t>(cls + 1)),
             "class " + std::to_string(cls) + " minimal polynomial is not P^" +
                 std::to_string(cls + 1));
  }
  return c.finish("classes 0..3 measure lc 5, 10, 15, 20 with minimal polynomials P^1..P^4");
}

CheckResult check_table2() {
  Check c("binomial-rows-and-periods");
  const std::array<const char*, 8> rows = {
      "11111111", "01010101", "00110011", "00010001",
      "00001111", "00000101", "00000011", "00000001",
  };
  for (uint64_t i = 0; i < 8; ++i) {
    std::string got;
    for (uint64_t n = 0; n < 8; ++n) got += static_cast<char>('0' + diffeq::binomial_bit(n, i));
    c.expect(got == rows[i], "binomial row " + std::to_string(i) + " is " + got);
  }
  const std::array<uint64_t, 8> periods = {1, 2, 4, 4, 8, 8, 8, 8};
  for (uint64_t i = 0; i < 8; ++i)
    c.expect(diffeq::binomial_period(i) == periods[i],
             "period of row " + std::to_string(i) + " is not " + std::to_string(periods[i]));
  return c.finish("rows 0..7 over n = 0..7 and periods 1,2,4,4,8,8,8,8");
}

CheckResult check_oracle_equivalence(uint64_t seed) {
  Check c("closed-form-vs-recurrence");
  std::mt19937_64 rng(seed);
  const std::array<BinaryPolynomial, 2> bases = {p3(), p5()};
  for (int trial = 0; trial < 100; ++trial) {
    const BinaryPolynomial& base = bases[rng() % 2];
    uint64_t p = 2 + rng() % 3;
    diffeq::DifferenceEquation eq(base, p);
    std::vector<uint64_t> masks(p);
    for (auto& m : masks) m = rng() & ((uint64_t{1} << eq.r()) - 1);
    auto coeffs = diffeq::SolutionCoeffs::from_masks(eq, masks);

    size_t rp = static_cast<size_t>(eq.r()) * p;
    size_t len = 5 * rp;  // rp seed bits plus 4rp checked bits
    BitSequence closed = diffeq::solution_sequence(eq, coeffs, len);
    BitSequence rec = diffeq::recurrence_sequence(eq.characteristic_poly(), closed.slice(0, rp), len);
    if (!(closed == rec)) {
      c.expect(false, "trial " + std::to_string(trial) + " (r=" + std::to_string(eq.r()) +
                          ", p=" + std::to_string(p) + ") disagrees");
      break;
    }
  }
  return c.finish("100 random coefficient tuples agree with the recurrence over 4rp bits");
}

CheckResult check_shrink_linearize() {
  Check c("shrinking-generator-linearization");
  generators::ShrinkingConfig cfg{
      generators::LFSRConfig(p3(), BitSequence::parse("111")),
      generators::LFSRConfig(p5(), BitSequence::parse("00001")),
  };
  BitSequence keystream = generators::shrink_keystream(cfg, 248);
  c.expect(analysis::minimal_period(keystream) == 124, "keystream period is not 124");

  analysis::LinearProfile lp = analysis::berlekamp_massey(keystream);
  auto power = analysis::detect_primitive_power(lp.minimal_poly);
  c.expect(power.has_value(), "minimal polynomial is not a primitive power");
  if (power) {
    c.expect(power->base.degree() == 5, "base degree is " + std::to_string(power->base.degree()));
    c.expect(power->multiplicity > 2 && power->multiplicity <= 4,
             "multiplicity " + std::to_string(power->multiplicity) + " outside (2, 4]");
  }

  generators::CAModel model = generators::linearize(keystream);
  c.expect(model.rule.length() == 20, "model length is " + std::to_string(model.rule.length()));
  BitSequence reproduced =
      ca::run_column(model.rule, model.initial_state, model.read_cell, keystream.size());
  c.expect(reproduced == keystream, "model column does not reproduce the keystream");
  c.expect(generators::model_period(model) == 124, "model column period is not 124");
  return c.finish("minimal polynomial Q^p (deg Q = 5, 2 < p <= 4); 20-cell model replays the "
                  "124-bit period");
}

CheckResult check_property_suites(uint64_t seed) {
  Check c("property-suites");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

  auto random_rule = [&](size_t max_len) {
    size_t len = 1 + rng() % max_len;
    std::vector<uint8_t> d(len);
    for (auto& b : d) b = rng() & 1;
    return ca::RuleVector(std::move(d));
  };
  auto random_state = [&](size_t len) {
    std::vector<uint8_t> cells(len);
    for (auto& b : cells) b = rng() & 1;
    return ca::CAState(std::move(cells));
  };

  for (int trial = 0; trial < 200; ++trial) {
    ca::RuleVector rule = random_rule(12);
    ca::CAState s = random_state(rule.length());
    ca::CAState t = random_state(rule.length());
    if (!(ca::step(rule, s ^ t) == (ca::step(rule, s) ^ ca::step(rule, t)))) {
      c.expect(false, "step linearity fails for rule " + rule.to_string());
      break;
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    ca::RuleVector rule = random_rule(24);
    if (!(ca::char_poly(rule) == ca::char_poly(ca::reverse(rule)))) {
      c.expect(false, "reversal changes char poly of " + rule.to_string());
      break;
    }
  }

  for (int trial = 0; trial < 100; ++trial) {
    ca::RuleVector rule = random_rule(12);
    BinaryPolynomial p = ca::char_poly(rule);
    if (!(ca::char_poly(ca::concat_double(rule)) == p * p)) {
      c.expect(false, "concat_double does not square char poly of " + rule.to_string());
      break;
    }
  }

  // PN-sequence periods for every primitive polynomial of degree <= 8.
  const std::array<size_t, 8> primitive_counts = {1, 1, 2, 2, 6, 6, 18, 16};
  for (int r = 1; r <= 8; ++r) {
    size_t found = 0;
    for (uint64_t mask = uint64_t{1} << r; mask < (uint64_t{2} << r); ++mask) {
      BinaryPolynomial p = BinaryPolynomial::from_coeff_mask(mask);
      if (!gf2::is_primitive(p)) continue;
      ++found;
      auto [rule, rev] = ca::synthesize(p);
      uint64_t want = (uint64_t{1} << r) - 1;
      ca::CAState e1 = ca::CAState::from_mask(1, static_cast<size_t>(r));
      BitSequence col = ca::run_column(rule, e1, 1, static_cast<size_t>(2 * want));
      if (analysis::minimal_period(col) != want) {
        c.expect(false, "column period != 2^r - 1 for " + p.to_string());
      }
      ca::CAState s = random_state(static_cast<size_t>(r));
      if (s.all_zero()) s = e1;
      col = ca::run_column(rev, s, 1 + static_cast<int>(rng() % r), 2 * static_cast<size_t>(want));
      if (analysis::minimal_period(col) != want) {
        c.expect(false, "reversal column period != 2^r - 1 for " + p.to_string());
      }
    }
    c.expect(found == primitive_counts[static_cast<size_t>(r) - 1],
             "degree " + std::to_string(r) + " has " + std::to_string(found) +
                 " primitive polynomials");
  }

  return c.finish("step linearity, reversal invariance, concatenation squaring, PN periods for "
                  "all primitive polynomials of degree <= 8");
}

template <typename F>
CheckResult guarded(const char* name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return Check(name).finish_exception(e.what());
  }
}

}  // namespace

std::vector<CheckResult> run_all(uint64_t seed) {
  std::vector<CheckResult> results;
  results.push_back(guarded("table1-state-rows-and-pn-column", [] { return check_table1(); }));
  results.push_back(guarded("characteristic-polynomials", [] { return check_char_polys(); }));
  results.push_back(guarded("concatenation-to-multiplicity-4", [] { return check_theorem1(); }));
  results.push_back(guarded("cycle-census-2^20", [] { return check_census(); }));
  results.push_back(guarded("linear-complexity-ladder", [] { return check_lc_ladder(); }));
  results.push_back(guarded("binomial-rows-and-periods", [] { return check_table2(); }));
  results.push_back(
      guarded("closed-form-vs-recurrence", [seed] { return check_oracle_equivalence(seed); }));
  results.push_back(
      guarded("shrinking-generator-linearization", [] { return check_shrink_linearize(); }));
  results.push_back(guarded("property-suites", [seed] { return check_property_suites(seed); }));
  return results;
}

}  // namespace lhca::verify
