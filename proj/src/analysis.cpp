#include "lhca/analysis.hpp"

#include <stdexcept>
#include <vector>

namespace lhca::analysis {

LinearProfile berlekamp_massey(const BitSequence& bits) {
  const size_t n = bits.size();
  // Connection polynomial convention: a_i = sum_{j=1}^{L} c_j a_{i-j}.
  std::vector<uint8_t> c(n + 1, 0), b(n + 1, 0);
  c[0] = b[0] = 1;
  int L = 0;
  size_t m = 1;
  for (size_t i = 0; i < n; ++i) {
    uint8_t d = static_cast<uint8_t>(bits[i]);
    for (int j = 1; j <= L; ++j) d ^= static_cast<uint8_t>(c[j] & bits[i - j]);
    if (d == 0) {
      ++m;
      continue;
    }
    if (2 * L <= static_cast<int>(i)) {
      std::vector<uint8_t> t = c;
      for (size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      L = static_cast<int>(i) + 1 - L;
      b = std::move(t);
      m = 1;
    } else {
      for (size_t j = 0; j + m <= n; ++j) c[j + m] ^= b[j];
      ++m;
    }
  }

  // Reciprocal of the connection polynomial: P(x) = x^L C(1/x).
  LinearProfile out;
  out.lc = L;
  for (int j = 0; j <= L; ++j)
    if (c[j]) out.minimal_poly.set_coeff(L - j, true);
  return out;
}

uint64_t minimal_period(const BitSequence& bits) {
  const size_t n = bits.size();
  if (n <= 1) return 1;
  // Smallest period = n - (longest proper border), via the KMP failure table.
  std::vector<size_t> pi(n, 0);
  for (size_t i = 1; i < n; ++i) {
    size_t k = pi[i - 1];
    while (k > 0 && bits[i] != bits[k]) k = pi[k - 1];
    if (bits[i] == bits[k]) ++k;
    pi[i] = k;
  }
  return n - pi[n - 1];
}

std::optional<PrimitivePower> detect_primitive_power(const gf2::BinaryPolynomial& m) {
  if (m.is_zero()) throw std::invalid_argument("detect_primitive_power: zero polynomial");
  if (m.degree() == 0) return std::nullopt;  // constants have no primitive base

  gf2::BinaryPolynomial odd_part = m;
  int even_mult = 1;
  while (true) {
    auto root = gf2::sqrt_exact(odd_part);
    if (!root) break;
    odd_part = *root;
    even_mult *= 2;
  }

  // odd_part = Q^c with c odd, if m has the right form; then
  // gcd(odd_part, odd_part') = Q^(c-1).
  gf2::BinaryPolynomial g = gcd(odd_part, derivative(odd_part));
  auto [q, rem] = divmod(odd_part, g);
  if (!rem.is_zero() || q.degree() < 1) return std::nullopt;
  if (odd_part.degree() % q.degree() != 0) return std::nullopt;
  int c = odd_part.degree() / q.degree();
  if (!(pow(q, static_cast<uint64_t>(c)) == odd_part)) return std::nullopt;
  if (!gf2::is_irreducible(q)) return std::nullopt;
  // Primitivity of an irreducible base needs the factorization of 2^deg - 1.
  if (q.degree() > 32)
    throw std::domain_error("detect_primitive_power: base degree exceeds primitivity bound (32)");
  if (!gf2::is_primitive(q)) return std::nullopt;
  return PrimitivePower{q, even_mult * c};
}

}  // namespace lhca::analysis
