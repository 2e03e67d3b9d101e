#pragma once

#include <cstdint>
#include <optional>

#include "lhca/bitseq.hpp"
#include "lhca/gf2.hpp"

namespace lhca::analysis {

/// Result of LFSR synthesis on a window: the length of the shortest linear
/// recurrence generating it and the matching characteristic polynomial
/// (x^lc + sum c_j x^(lc-j), so degree(minimal_poly) == lc). lc is 0 exactly
/// for the all-zero window, where minimal_poly is 1.
struct LinearProfile {
  int lc = 0;
  gf2::BinaryPolynomial minimal_poly;
};

/// Berlekamp-Massey over GF(2). For a sequence of true linear complexity c,
/// a window of at least 2c bits recovers the exact minimal polynomial.
LinearProfile berlekamp_massey(const BitSequence& bits);

/// Smallest d >= 1 with bits[n] == bits[n+d] for all valid n. The window must
/// hold at least two full periods for this to be the period of the underlying
/// sequence.
uint64_t minimal_period(const BitSequence& bits);

struct PrimitivePower {
  gf2::BinaryPolynomial base;
  int multiplicity = 1;
};

/// The unique decomposition m = Q^p with Q primitive, if one exists.
/// Even multiplicity is stripped by exact square roots; the odd part is
/// recovered from gcd(m, m') and checked by division and primitivity.
std::optional<PrimitivePower> detect_primitive_power(const gf2::BinaryPolynomial& m);

}  // namespace lhca::analysis
