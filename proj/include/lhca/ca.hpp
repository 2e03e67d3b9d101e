#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lhca/bitseq.hpp"
#include "lhca/gf2.hpp"

namespace lhca::ca {

/// Rule assignment of a one-dimensional hybrid 90/150 automaton.
/// rules()[i] is d_{i+1}: 0 = cell i+1 obeys rule 90, 1 = rule 150.
/// Text form is a bit string, leftmost character = d_1.
class RuleVector {
 public:
  explicit RuleVector(std::vector<uint8_t> d);
  RuleVector(std::initializer_list<uint8_t> d) : RuleVector(std::vector<uint8_t>(d)) {}
  static RuleVector parse(std::string_view s);

  size_t length() const { return d_.size(); }
  int operator[](size_t i) const { return d_[i]; }
  const std::vector<uint8_t>& rules() const { return d_; }
  std::string to_string() const;

  /// Bit k-1 = d_k; requires length <= 64.
  uint64_t to_mask() const;

  friend bool operator==(const RuleVector& a, const RuleVector& b) { return a.d_ == b.d_; }

 private:
  std::vector<uint8_t> d_;
};

/// Cell contents b^1..b^L at one time step. cells()[i] is cell i+1;
/// text form is a bit string, leftmost character = cell 1.
class CAState {
 public:
  explicit CAState(std::vector<uint8_t> cells);
  CAState(std::initializer_list<uint8_t> cells) : CAState(std::vector<uint8_t>(cells)) {}
  static CAState parse(std::string_view s);
  static CAState zeros(size_t length) { return CAState(std::vector<uint8_t>(length, 0)); }
  static CAState from_mask(uint64_t mask, size_t length);

  size_t length() const { return cells_.size(); }
  int operator[](size_t i) const { return cells_[i]; }
  const std::vector<uint8_t>& cells() const { return cells_; }
  std::string to_string() const;
  uint64_t to_mask() const;
  bool all_zero() const;

  friend CAState operator^(const CAState& a, const CAState& b);
  friend bool operator==(const CAState& a, const CAState& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<uint8_t> cells_;
};

enum class SymmetryClass { doubly_symmetric, symmetric, repetitive, other };

std::string_view to_string(SymmetryClass c);

struct CycleGroup {
  uint64_t length = 0;
  uint64_t count = 0;
  std::map<SymmetryClass, uint64_t> symmetry;  // states of each class across the group
};

/// Partition of the full state space into cycles of the step map, grouped by
/// cycle length (ascending). Sum of length*count over groups equals 2^L.
struct CycleCensus {
  size_t L = 0;
  uint64_t total_states = 0;
  std::vector<CycleGroup> groups;

  const CycleGroup* find_length(uint64_t length) const;
};

/// One synchronous update. Boundary neighbors read as 0 (null automaton).
CAState step(const RuleVector& rule, const CAState& s);

/// Contents of one cell over len successive states starting at s0.
/// cell_index is 1-based, following the automaton numbering b^1..b^L.
BitSequence run_column(const RuleVector& rule, const CAState& s0, int cell_index, size_t len);

/// Characteristic polynomial of the L-cell automaton, via the sub-automaton
/// recurrence P_k = (x + d_k) P_{k-1} + P_{k-2}, P_0 = 1, P_{-1} = 0.
gf2::BinaryPolynomial char_poly(const RuleVector& rule);

/// Rule vector read backwards; shares the characteristic polynomial.
RuleVector reverse(const RuleVector& rule);

/// Length-2L automaton (d_1, ..., ~d_L, ~d_L, ..., d_1): the rule vector
/// concatenated with its reversal after complementing the last rule. Its
/// characteristic polynomial is char_poly(rule)^2.
RuleVector concat_double(const RuleVector& rule);

/// Applies concat_double q = ceil(log2 p) times (q = 0 for p = 1), giving a
/// length-2^q*L automaton of characteristic polynomial char_poly(rule)^(2^q),
/// which covers multiplicities 2^(q-1) < p <= 2^q.
RuleVector concat_to_multiplicity(const RuleVector& rule, uint64_t p);

/// The pair (rule, reverse(rule)) of 90/150 automata whose characteristic
/// polynomial is p, found by exhaustive search over rule vectors; p must be
/// primitive of degree <= 24. When several automata match, the
/// lexicographically smallest is returned first.
std::pair<RuleVector, RuleVector> synthesize(const gf2::BinaryPolynomial& p);

/// doubly_symmetric: palindrome and 2-fold repetition of the first half;
/// symmetric: palindrome only; repetitive: repetition only. Needs even L.
SymmetryClass classify_state(const CAState& s);

/// Enumerates all 2^L states (L <= 26) with a visited bitmap. The step map
/// must be a bijection, which is checked up front via the determinant of the
/// transition matrix (the constant term of the characteristic polynomial).
/// With threads > 1 the state space is scanned by several workers; each cycle
/// is claimed by its minimal state, so the result is identical to the
/// sequential census.
CycleCensus cycle_census(const RuleVector& rule, unsigned threads = 1);

}  // namespace lhca::ca
