#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lhca::gf2 {

/// Polynomial over GF(2), stored as a packed coefficient vector.
/// Bit i of word i/64 holds the coefficient of x^i. Always normalized:
/// no trailing zero words, so degree() is the index of the highest set bit.
/// The zero polynomial has degree -1.
class BinaryPolynomial {
 public:
  BinaryPolynomial() = default;  // zero

  static BinaryPolynomial zero() { return BinaryPolynomial(); }
  static BinaryPolynomial one() { return from_coeff_mask(1); }
  static BinaryPolynomial x() { return from_coeff_mask(2); }
  static BinaryPolynomial monomial(int k);
  static BinaryPolynomial from_coeff_mask(uint64_t mask);

  /// Accepts the sparse form ("x^5+x^4+x^2+x+1", "x", "1", "0") or a hex
  /// coefficient mask with bit i = coefficient of x^i ("0x37").
  static BinaryPolynomial parse(std::string_view text);

  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coeff(int i) const;
  void set_coeff(int i, bool value);
  void flip_coeff(int i);

  /// Coefficient mask; requires degree < 64.
  uint64_t to_mask() const;

  /// Sparse form, degree-descending ("x^3+x^2+1"); "0" for the zero polynomial.
  std::string to_string() const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& rhs);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) {
    a += b;
    return a;
  }

  /// Carry-less product.
  friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b);

  /// Quotient and remainder of polynomial division; divisor must be nonzero.
  friend std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a,
                                                              const BinaryPolynomial& m);
  friend BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& m) {
    return divmod(a, m).first;
  }
  friend BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& m) {
    return divmod(a, m).second;
  }

  friend bool operator==(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    return a.words_ == b.words_;
  }

  /// Shift by x^k (multiplication by a monomial).
  BinaryPolynomial shifted(int k) const;

 private:
  void normalize();
  std::vector<uint64_t> words_;
};

BinaryPolynomial pow(const BinaryPolynomial& a, uint64_t n);
BinaryPolynomial powmod(const BinaryPolynomial& a, uint64_t n, const BinaryPolynomial& m);
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);
BinaryPolynomial derivative(const BinaryPolynomial& a);

/// Square root when the argument is a perfect square (only even exponents);
/// nullopt otherwise.
std::optional<BinaryPolynomial> sqrt_exact(const BinaryPolynomial& a);

/// True iff p has no nontrivial factor over GF(2). Requires degree >= 1.
bool is_irreducible(const BinaryPolynomial& p);

/// True iff p is irreducible and the class of x has multiplicative order
/// exactly 2^r - 1 in GF(2)[x]/(p). Degree must be in [1, 32]; 2^r - 1 is
/// factored by trial division. By this definition x+1 is primitive (the
/// multiplicative group of GF(2) is trivial).
bool is_primitive(const BinaryPolynomial& p);

/// Prime factorization of n by trial division, ascending, without multiplicity.
std::vector<uint64_t> prime_factors(uint64_t n);

class FieldElement;

/// Fixes the representation GF(2^r) = GF(2)[x]/(P(x)) for a primitive P.
/// alpha denotes the class of x, a generator of the multiplicative group.
class FieldContext {
 public:
  explicit FieldContext(BinaryPolynomial modulus);

  int r() const { return r_; }
  const BinaryPolynomial& modulus() const { return modulus_; }
  uint64_t modulus_mask() const { return modulus_mask_; }

  FieldElement element(uint64_t bits) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement alpha() const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.modulus_mask_ == b.modulus_mask_;
  }

 private:
  BinaryPolynomial modulus_;
  uint64_t modulus_mask_ = 0;
  int r_ = 0;
};

/// Element of GF(2^r) in the polynomial basis: bit j = coordinate of x^j.
/// Carries its field's modulus by value, so elements are plain values and
/// a context mismatch is detected on every binary operation.
class FieldElement {
 public:
  FieldElement() = default;

  uint64_t bits() const { return bits_; }
  uint64_t modulus_mask() const { return modulus_mask_; }
  int r() const { return r_; }
  bool is_zero() const { return bits_ == 0; }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    a.require_same_context(b);
    a.bits_ ^= b.bits_;
    return a;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.modulus_mask_ == b.modulus_mask_ && a.bits_ == b.bits_;
  }

 private:
  friend class FieldContext;
  friend FieldElement pow(FieldElement a, uint64_t n);
  friend int trace(const FieldElement& a);

  FieldElement(uint64_t bits, uint64_t modulus_mask, int r)
      : bits_(bits), modulus_mask_(modulus_mask), r_(r) {}
  void require_same_context(const FieldElement& other) const;

  uint64_t bits_ = 0;
  uint64_t modulus_mask_ = 0;
  int r_ = 0;
};

/// a^n by square-and-multiply; a^0 = 1.
FieldElement pow(FieldElement a, uint64_t n);

/// Field trace sum_{j=0}^{r-1} a^(2^j), which lands in GF(2); returned as 0/1.
int trace(const FieldElement& a);

}  // namespace lhca::gf2
