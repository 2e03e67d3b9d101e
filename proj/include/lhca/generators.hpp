#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "lhca/bitseq.hpp"
#include "lhca/ca.hpp"
#include "lhca/gf2.hpp"

namespace lhca::generators {

/// A Fibonacci-mode LFSR: the state holds the next n output bits (state[0] is
/// emitted first) and feedback taps are the coefficients of the primitive
/// characteristic polynomial.
class LFSRConfig {
 public:
  LFSRConfig(gf2::BinaryPolynomial poly, BitSequence state);

  const gf2::BinaryPolynomial& poly() const { return poly_; }
  const BitSequence& state() const { return state_; }
  int length() const { return poly_.degree(); }

 private:
  gf2::BinaryPolynomial poly_;
  BitSequence state_;
};

/// Shrinking generator: both registers are clocked together and the data bit
/// is emitted whenever the control bit is 1.
struct ShrinkingConfig {
  LFSRConfig control;
  LFSRConfig data;
};

/// A 90/150 automaton together with an initial state and the 1-based cell
/// whose column reproduces a target keystream.
struct CAModel {
  ca::RuleVector rule;
  ca::CAState initial_state;
  int read_cell = 1;
};

/// Raised by linearize when the keystream's minimal polynomial is not a power
/// of a primitive polynomial, i.e. the concatenated-automaton model does not
/// apply.
class OutsideModelClassError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// First len output bits. A nonzero seed yields a PN-sequence of period
/// 2^n - 1 (recorded in the result's period field); the zero seed yields the
/// zero sequence.
BitSequence lfsr_sequence(const LFSRConfig& cfg, size_t len);

/// Exactly len keystream bits; the registers are clocked internally as long
/// as needed. The control state must not be all zero.
BitSequence shrink_keystream(const ShrinkingConfig& cfg, size_t len);

/// Solves rule-linear system mapping initial states to the first L bits of
/// the given cell's column; nullopt when the system is inconsistent.
std::optional<ca::CAState> solve_initial_state(const ca::RuleVector& rule, int read_cell,
                                               const BitSequence& target);

/// Builds a CA model reproducing the keystream: Berlekamp-Massey, primitive
/// power detection, synthesis of the basic automaton, Theorem-1 concatenation
/// up to the detected multiplicity, and an initial-state solve. The window
/// must cover at least twice the true linear complexity. Tries cell 1 first,
/// then the remaining cells, then the reversal automaton.
CAModel linearize(const BitSequence& keystream);

/// Minimal period of the model's column, measured from a window of two full
/// state cycles.
uint64_t model_period(const CAModel& model);

}  // namespace lhca::generators
