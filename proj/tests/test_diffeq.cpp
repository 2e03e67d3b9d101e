#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lhca/analysis.hpp"
#include "lhca/ca.hpp"
#include "lhca/diffeq.hpp"
#include "lhca/generators.hpp"

using lhca::BitSequence;
using lhca::gf2::BinaryPolynomial;
namespace ca = lhca::ca;
namespace diffeq = lhca::diffeq;
namespace gf2 = lhca::gf2;

namespace {

constexpr uint64_t kSeed = 0x90150;

BinaryPolynomial P(const char* text) { return BinaryPolynomial::parse(text); }

diffeq::SolutionCoeffs random_coeffs(std::mt19937_64& rng, const diffeq::DifferenceEquation& eq) {
  std::vector<uint64_t> masks(eq.multiplicity());
  for (auto& m : masks) m = rng() & ((uint64_t{1} << eq.r()) - 1);
  return diffeq::SolutionCoeffs::from_masks(eq, masks);
}

}  // namespace

TEST_CASE("binomial bits match the reference rows") {
  CHECK(diffeq::binomial_bit(4, 2) == 0);
  for (uint64_t n = 0; n < 16; ++n) CHECK(diffeq::binomial_bit(n, 0) == 1);
  CHECK(diffeq::binomial_bit(7, 7) == 1);

  const char* rows[8] = {
      "11111111", "01010101", "00110011", "00010001",
      "00001111", "00000101", "00000011", "00000001",
  };
  for (uint64_t i = 0; i < 8; ++i)
    for (uint64_t n = 0; n < 8; ++n)
      CHECK(diffeq::binomial_bit(n, i) == rows[i][n] - '0');
}

TEST_CASE("binomial periods") {
  CHECK(diffeq::binomial_period(0) == 1);
  CHECK(diffeq::binomial_period(3) == 4);
  CHECK(diffeq::binomial_period(4) == 8);
  const uint64_t expected[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  for (uint64_t i = 0; i < 8; ++i) CHECK(diffeq::binomial_period(i) == expected[i]);
}

TEST_CASE("binomial rows are periodic with exactly their stated period") {
  for (uint64_t i = 0; i <= 16; ++i) {
    uint64_t t = diffeq::binomial_period(i);
    BitSequence row;
    for (uint64_t n = 0; n < 4 * t && n < 64; ++n) row.push_back(diffeq::binomial_bit(n, i));
    for (uint64_t n = 0; n + t < row.size(); ++n) CHECK(row[n] == row[n + t]);
    if (4 * t <= 64) CHECK(lhca::analysis::minimal_period(row) == t);
  }
}

TEST_CASE("equation construction") {
  CHECK_THROWS_AS(diffeq::DifferenceEquation(P("x^3+x^2+1"), 0), std::invalid_argument);
  CHECK_THROWS_AS(diffeq::DifferenceEquation(P("x^4+x^3+x^2+x+1"), 2), std::domain_error);
  diffeq::DifferenceEquation eq(P("x^3+x^2+1"), 2);
  CHECK(eq.r() == 3);
  CHECK(eq.characteristic_poly() == P("x^3+x^2+1") * P("x^3+x^2+1"));
  CHECK_THROWS_AS(diffeq::SolutionCoeffs::from_masks(eq, {1}), std::invalid_argument);
}

TEST_CASE("the zero tuple solves to the zero sequence") {
  diffeq::DifferenceEquation eq(P("x^3+x^2+1"), 3);
  auto zero = diffeq::SolutionCoeffs::from_masks(eq, {0, 0, 0});
  CHECK(zero.all_zero());
  CHECK(zero.class_index() == -1);
  for (uint64_t n = 0; n < 20; ++n) CHECK(diffeq::solution_term(eq, zero, n) == 0);
  CHECK(diffeq::solution_sequence(eq, zero, 40).all_zero());
}

TEST_CASE("multiplicity-1 solution is the PN-sequence") {
  diffeq::DifferenceEquation eq(P("x^3+x^2+1"), 1);
  auto coeffs = diffeq::SolutionCoeffs::from_masks(eq, {1});
  BitSequence seq = diffeq::solution_sequence(eq, coeffs, 14);

  // Two identical periods of a shift of the reference PN-sequence.
  CHECK(seq.slice(0, 7) == seq.slice(7, 7));
  CHECK(lhca::analysis::minimal_period(seq) == 7);
  const BitSequence reference = BitSequence::parse("1110100");
  bool shift_equivalent = false;
  for (size_t s = 0; s < 7 && !shift_equivalent; ++s) {
    bool match = true;
    for (size_t n = 0; n < 7; ++n)
      if (seq[n] != reference[(n + s) % 7]) {
        match = false;
        break;
      }
    shift_equivalent = match;
  }
  CHECK(shift_equivalent);
}

TEST_CASE("multiplicity-2 solution masked by the alternating bit") {
  // A_0 = 0, A_1 = 1: the PN-sequence gated by C(n,1) = n mod 2.
  diffeq::DifferenceEquation eq(P("x^3+x^2+1"), 2);
  auto coeffs = diffeq::SolutionCoeffs::from_masks(eq, {0, 1});
  BitSequence got = diffeq::solution_sequence(eq, coeffs, 14);
  CHECK(got == BitSequence::parse("01000001010100"));

  // Same thing from the two factor sequences computed directly.
  gf2::FieldContext field(P("x^3+x^2+1"));
  for (uint64_t n = 0; n < 14; ++n) {
    int expect = (n % 2) ? trace(pow(field.alpha(), n)) : 0;
    CHECK(got[n] == expect);
  }
}

TEST_CASE("class-3 solutions have period 124") {
  diffeq::DifferenceEquation eq(P("x^5+x^4+x^2+x+1"), 4);
  auto coeffs = diffeq::SolutionCoeffs::from_masks(eq, {0, 0, 0, 3});
  BitSequence seq = diffeq::solution_sequence(eq, coeffs, 248);
  CHECK(lhca::analysis::minimal_period(seq) == 124);
}

TEST_CASE("recurrence oracle basics") {
  BitSequence seq = diffeq::recurrence_sequence(P("x^3+x^2+1"), BitSequence::parse("111"), 10);
  CHECK(seq == BitSequence::parse("1110100111"));
  CHECK(diffeq::recurrence_sequence(P("x^3+x^2+1"), BitSequence::zeros(3), 20).all_zero());
  CHECK_THROWS_AS(diffeq::recurrence_sequence(P("x^3+x^2+1"), BitSequence::parse("11"), 10),
                  std::invalid_argument);
  // len shorter than the seed just truncates.
  CHECK(diffeq::recurrence_sequence(P("x^3+x^2+1"), BitSequence::parse("101"), 2) ==
        BitSequence::parse("10"));
}

TEST_CASE("recurrence continues any multiplicity-2 solution") {
  std::mt19937_64 rng(kSeed);
  diffeq::DifferenceEquation eq(P("x^3+x^2+1"), 2);
  BinaryPolynomial charpoly = eq.characteristic_poly();
  for (int trial = 0; trial < 20; ++trial) {
    auto coeffs = random_coeffs(rng, eq);
    BitSequence sol = diffeq::solution_sequence(eq, coeffs, 28);  // two periods of 14
    CHECK(diffeq::recurrence_sequence(charpoly, sol.slice(0, 6), 28) == sol);
  }
}

TEST_CASE("closed form and recurrence agree for random tuples") {
  std::mt19937_64 rng(kSeed + 1);
  const BinaryPolynomial bases[2] = {P("x^3+x^2+1"), P("x^5+x^4+x^2+x+1")};
  for (int trial = 0; trial < 40; ++trial) {
    diffeq::DifferenceEquation eq(bases[rng() % 2], 2 + rng() % 3);
    auto coeffs = random_coeffs(rng, eq);
    size_t rp = static_cast<size_t>(eq.r()) * eq.multiplicity();
    BitSequence sol = diffeq::solution_sequence(eq, coeffs, 4 * rp);
    CHECK(diffeq::recurrence_sequence(eq.characteristic_poly(), sol.slice(0, rp), 4 * rp) == sol);
  }
}

TEST_CASE("solutions are closed under XOR") {
  std::mt19937_64 rng(kSeed + 2);
  diffeq::DifferenceEquation eq(P("x^5+x^4+x^2+x+1"), 4);
  const size_t rp = 20;
  for (int trial = 0; trial < 20; ++trial) {
    BitSequence a = diffeq::solution_sequence(eq, random_coeffs(rng, eq), 5 * rp);
    BitSequence b = diffeq::solution_sequence(eq, random_coeffs(rng, eq), 5 * rp);
    BitSequence sum = a ^ b;
    CHECK(diffeq::recurrence_sequence(eq.characteristic_poly(), sum.slice(0, rp), 5 * rp) == sum);
  }
}

TEST_CASE("profiles of the four solution classes") {
  diffeq::DifferenceEquation eq(P("x^5+x^4+x^2+x+1"), 4);

  auto class0 = diffeq::profile(eq, diffeq::SolutionCoeffs::from_masks(eq, {1, 0, 0, 0}));
  CHECK(class0.period == 31);
  CHECK(class0.linear_complexity == 5);
  CHECK(class0.class_index == 0);

  auto class1 = diffeq::profile(eq, diffeq::SolutionCoeffs::from_masks(eq, {0, 7, 0, 0}));
  CHECK(class1.period == 62);
  CHECK(class1.linear_complexity == 10);

  auto class2 = diffeq::profile(eq, diffeq::SolutionCoeffs::from_masks(eq, {0, 0, 1, 0}));
  CHECK(class2.period == 124);
  CHECK(class2.linear_complexity == 15);
  CHECK(class2.class_index == 2);

  auto class3 = diffeq::profile(eq, diffeq::SolutionCoeffs::from_masks(eq, {0, 0, 0, 1}));
  CHECK(class3.period == 124);
  CHECK(class3.linear_complexity == 20);

  // Lower coefficients do not change the class profile.
  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < 10; ++trial) {
    uint64_t lo = rng() & 31;
    auto mixed = diffeq::profile(eq, diffeq::SolutionCoeffs::from_masks(eq, {lo, rng() & 31, 1, 0}));
    CHECK(mixed.period == 124);
    CHECK(mixed.linear_complexity == 15);
    CHECK(mixed.class_index == 2);
  }

  CHECK_THROWS_AS(diffeq::profile(eq, diffeq::SolutionCoeffs::from_masks(eq, {0, 0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("every class period divides its bound") {
  std::mt19937_64 rng(kSeed + 4);
  const BinaryPolynomial bases[2] = {P("x^3+x^2+1"), P("x^5+x^4+x^2+x+1")};
  for (int trial = 0; trial < 30; ++trial) {
    diffeq::DifferenceEquation eq(bases[rng() % 2], 1 + rng() % 4);
    auto coeffs = random_coeffs(rng, eq);
    if (coeffs.all_zero()) continue;
    auto prof = diffeq::profile(eq, coeffs);
    uint64_t bound = diffeq::binomial_period(static_cast<uint64_t>(prof.class_index)) *
                     ((uint64_t{1} << eq.r()) - 1);
    CHECK(bound % prof.period == 0);
  }
}

TEST_CASE("shift-class counts") {
  diffeq::DifferenceEquation eq(P("x^5+x^4+x^2+x+1"), 4);
  CHECK(diffeq::count_solution_classes(eq, 0) == 1);
  CHECK(diffeq::count_solution_classes(eq, 1) == 16);
  CHECK(diffeq::count_solution_classes(eq, 2) == 256);
  CHECK(diffeq::count_solution_classes(eq, 3) == 8192);
  CHECK_THROWS_AS(diffeq::count_solution_classes(eq, 4), std::out_of_range);
  CHECK_THROWS_AS(diffeq::count_solution_classes(eq, -1), std::out_of_range);
}

TEST_CASE("automaton columns and equation solutions coincide") {
  std::mt19937_64 rng(kSeed + 5);
  diffeq::DifferenceEquation eq(P("x^5+x^4+x^2+x+1"), 4);
  ca::RuleVector delta20 = lhca::ca::concat_to_multiplicity(ca::RuleVector{1, 0, 0, 0, 0}, 4);
  BinaryPolynomial charpoly = eq.characteristic_poly();
  CHECK(lhca::ca::char_poly(delta20) == charpoly);

  // Every cell-1 column satisfies the degree-20 recurrence.
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<uint8_t> cells(20);
    for (auto& b : cells) b = rng() & 1;
    ca::CAState s0{std::move(cells)};
    BitSequence col = lhca::ca::run_column(delta20, s0, 1, 100);
    CHECK(diffeq::recurrence_sequence(charpoly, col.slice(0, 20), 100) == col);
  }

  // Every solution appears as the cell-1 column of some initial state.
  for (int trial = 0; trial < 10; ++trial) {
    auto coeffs = random_coeffs(rng, eq);
    BitSequence sol = diffeq::solution_sequence(eq, coeffs, 124);
    auto s0 = lhca::generators::solve_initial_state(delta20, 1, sol);
    REQUIRE(s0.has_value());
    CHECK(lhca::ca::run_column(delta20, *s0, 1, 124) == sol);
  }
}
