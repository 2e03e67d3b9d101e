#pragma once

#include <cstdint>
#include <vector>

#include "lhca/bitseq.hpp"
#include "lhca/gf2.hpp"

namespace lhca::diffeq {

/// The linear binary difference equation whose characteristic polynomial is
/// P(x)^p for a primitive base P of degree r and root multiplicity p >= 1.
/// Owns the GF(2^r) context in which solution coefficients live.
class DifferenceEquation {
 public:
  DifferenceEquation(gf2::BinaryPolynomial base, uint64_t multiplicity);

  const gf2::BinaryPolynomial& base() const { return base_; }
  uint64_t multiplicity() const { return p_; }
  int r() const { return context_.r(); }
  const gf2::FieldContext& context() const { return context_; }

  /// P(x)^p, the characteristic polynomial of the equation.
  gf2::BinaryPolynomial characteristic_poly() const;

 private:
  gf2::BinaryPolynomial base_;
  uint64_t p_;
  gf2::FieldContext context_;
};

/// Coefficients A_0 .. A_{p-1} in GF(2^r) selecting one solution.
class SolutionCoeffs {
 public:
  explicit SolutionCoeffs(std::vector<gf2::FieldElement> coeffs);

  /// Builds coefficients from r-bit masks in the equation's field.
  static SolutionCoeffs from_masks(const DifferenceEquation& eq,
                                   const std::vector<uint64_t>& masks);

  size_t size() const { return coeffs_.size(); }
  const gf2::FieldElement& operator[](size_t i) const { return coeffs_[i]; }
  const std::vector<gf2::FieldElement>& coeffs() const { return coeffs_; }
  bool all_zero() const;

  /// Largest index with A_i != 0, or -1 when all coefficients vanish.
  int class_index() const;

 private:
  std::vector<gf2::FieldElement> coeffs_;
};

struct SolutionProfile {
  uint64_t period = 0;
  int linear_complexity = 0;
  int class_index = -1;
};

/// Binomial coefficient C(n, i) mod 2, by Lucas' theorem: 1 iff the base-2
/// digits of i are dominated by those of n.
int binomial_bit(uint64_t n, uint64_t i);

/// Period T_i of the sequence n -> C(n, i) mod 2: the smallest power of two
/// greater than i.
uint64_t binomial_period(uint64_t i);

/// n-th term of the solution selected by A: the XOR over i of
/// C(n, i) * trace(A_i * alpha^n).
int solution_term(const DifferenceEquation& eq, const SolutionCoeffs& coeffs, uint64_t n);

/// Terms n = 0 .. len-1 of the solution.
BitSequence solution_sequence(const DifferenceEquation& eq, const SolutionCoeffs& coeffs,
                              size_t len);

/// The independent route to the same sequences: run the linear recurrence of
/// the given characteristic polynomial from degree(charpoly) seed bits.
BitSequence recurrence_sequence(const gf2::BinaryPolynomial& charpoly, const BitSequence& seed,
                                size_t len);

/// Measured period and linear complexity of a nonzero solution, from a window
/// of 4 * T_i * (2^r - 1) generated bits (at least two full periods).
SolutionProfile profile(const DifferenceEquation& eq, const SolutionCoeffs& coeffs);

/// Number of shift-inequivalent solutions of class i:
/// 2^(r*i) * (2^r - 1) tuples divided by the class period T_i * (2^r - 1).
uint64_t count_solution_classes(const DifferenceEquation& eq, int class_index);

}  // namespace lhca::diffeq
