#include "lhca/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace lhca::gf2 {

namespace {

constexpr int kWordBits = 64;

uint64_t parse_hex_mask(std::string_view text) {
  uint64_t mask = 0;
  if (text.empty()) throw std::invalid_argument("polynomial: empty hex mask");
  for (char c : text) {
    int digit;
    if (c >= '0' && c <= '9')
      digit = c - '0';
    else if (c >= 'a' && c <= 'f')
      digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      digit = c - 'A' + 10;
    else
      throw std::invalid_argument("polynomial: bad hex digit");
    if (mask >> 60) throw std::invalid_argument("polynomial: hex mask exceeds 64 bits");
    mask = (mask << 4) | static_cast<uint64_t>(digit);
  }
  return mask;
}

}  // namespace

BinaryPolynomial BinaryPolynomial::monomial(int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  BinaryPolynomial p;
  p.set_coeff(k, true);
  return p;
}

BinaryPolynomial BinaryPolynomial::from_coeff_mask(uint64_t mask) {
  BinaryPolynomial p;
  if (mask) p.words_.push_back(mask);
  return p;
}

int BinaryPolynomial::degree() const {
  if (words_.empty()) return -1;
  int top = kWordBits - 1 - std::countl_zero(words_.back());
  return static_cast<int>(words_.size() - 1) * kWordBits + top;
}

bool BinaryPolynomial::coeff(int i) const {
  if (i < 0) return false;
  size_t w = static_cast<size_t>(i) / kWordBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kWordBits)) & 1u;
}

void BinaryPolynomial::set_coeff(int i, bool value) {
  if (i < 0) throw std::invalid_argument("set_coeff: negative exponent");
  size_t w = static_cast<size_t>(i) / kWordBits;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= uint64_t{1} << (i % kWordBits);
  } else if (w < words_.size()) {
    words_[w] &= ~(uint64_t{1} << (i % kWordBits));
    normalize();
  }
}

void BinaryPolynomial::flip_coeff(int i) { set_coeff(i, !coeff(i)); }

uint64_t BinaryPolynomial::to_mask() const {
  if (degree() >= kWordBits) throw std::domain_error("to_mask: degree exceeds 63");
  return words_.empty() ? 0 : words_[0];
}

void BinaryPolynomial::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  normalize();
  return *this;
}

BinaryPolynomial BinaryPolynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero()) return *this;
  BinaryPolynomial out;
  int words_shift = k / kWordBits;
  int bits_shift = k % kWordBits;
  out.words_.assign(words_.size() + static_cast<size_t>(words_shift) + 1, 0);
  for (size_t i = 0; i < words_.size(); ++i) {
    size_t j = i + static_cast<size_t>(words_shift);
    out.words_[j] |= words_[i] << bits_shift;
    if (bits_shift) out.words_[j + 1] |= words_[i] >> (kWordBits - bits_shift);
  }
  out.normalize();
  return out;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return BinaryPolynomial();
  BinaryPolynomial acc;
  acc.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (size_t i = 0; i < a.words_.size(); ++i) {
    uint64_t w = a.words_[i];
    while (w) {
      int bit = std::countr_zero(w);
      w &= w - 1;
      int shift = static_cast<int>(i) * kWordBits + bit;
      int words_shift = shift / kWordBits;
      int bits_shift = shift % kWordBits;
      for (size_t j = 0; j < b.words_.size(); ++j) {
        size_t t = j + static_cast<size_t>(words_shift);
        acc.words_[t] ^= b.words_[j] << bits_shift;
        if (bits_shift) acc.words_[t + 1] ^= b.words_[j] >> (kWordBits - bits_shift);
      }
    }
  }
  acc.normalize();
  return acc;
}

std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a,
                                                     const BinaryPolynomial& m) {
  if (m.is_zero()) throw std::invalid_argument("division by zero polynomial");
  BinaryPolynomial rem = a;
  BinaryPolynomial quot;
  int dm = m.degree();
  for (int d = rem.degree(); d >= dm; d = rem.degree()) {
    quot.set_coeff(d - dm, true);
    rem += m.shifted(d - dm);
  }
  return {quot, rem};
}

BinaryPolynomial pow(const BinaryPolynomial& a, uint64_t n) {
  BinaryPolynomial result = BinaryPolynomial::one();
  BinaryPolynomial base = a;
  while (n) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

BinaryPolynomial powmod(const BinaryPolynomial& a, uint64_t n, const BinaryPolynomial& m) {
  if (m.is_zero()) throw std::invalid_argument("division by zero polynomial");
  BinaryPolynomial result = BinaryPolynomial::one() % m;
  BinaryPolynomial base = a % m;
  while (n) {
    if (n & 1) result = (result * base) % m;
    base = (base * base) % m;
    n >>= 1;
  }
  return result;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
  while (!b.is_zero()) {
    BinaryPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryPolynomial derivative(const BinaryPolynomial& a) {
  // Over GF(2) only odd-exponent terms survive: d/dx x^k = k x^{k-1}.
  BinaryPolynomial out;
  for (int i = 1; i <= a.degree(); i += 2) {
    if (a.coeff(i)) out.set_coeff(i - 1, true);
  }
  return out;
}

std::optional<BinaryPolynomial> sqrt_exact(const BinaryPolynomial& a) {
  BinaryPolynomial root;
  for (int i = 0; i <= a.degree(); ++i) {
    if (!a.coeff(i)) continue;
    if (i & 1) return std::nullopt;
    root.set_coeff(i / 2, true);
  }
  return root;
}

bool is_irreducible(const BinaryPolynomial& p) {
  int r = p.degree();
  if (r < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  // Any reducible p has an irreducible factor of degree k <= r/2, and every
  // irreducible of degree k divides x^(2^k) - x.
  BinaryPolynomial t = BinaryPolynomial::x() % p;
  for (int k = 1; k <= r / 2; ++k) {
    t = (t * t) % p;  // t = x^(2^k) mod p
    if (!(gcd(t + BinaryPolynomial::x(), p) == BinaryPolynomial::one())) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> primes;
  for (uint64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_primitive(const BinaryPolynomial& p) {
  int r = p.degree();
  if (r < 1) throw std::invalid_argument("is_primitive: degree must be >= 1");
  if (r > 32) throw std::domain_error("is_primitive: degree exceeds factorization bound (32)");
  if (!is_irreducible(p)) return false;
  uint64_t group_order = (uint64_t{1} << r) - 1;
  const BinaryPolynomial x = BinaryPolynomial::x();
  if (!(powmod(x, group_order, p) == BinaryPolynomial::one())) return false;
  for (uint64_t q : prime_factors(group_order)) {
    if (powmod(x, group_order / q, p) == BinaryPolynomial::one()) return false;
  }
  return true;
}

std::string BinaryPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += '+';
    if (i == 0)
      out += '1';
    else if (i == 1)
      out += 'x';
    else
      out += "x^" + std::to_string(i);
  }
  return out;
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("polynomial: empty input");
  if (s.size() > 2 && (s.compare(0, 2, "0x") == 0 || s.compare(0, 2, "0X") == 0))
    return from_coeff_mask(parse_hex_mask(std::string_view(s).substr(2)));
  if (s == "0") return zero();

  BinaryPolynomial p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    int exp;
    if (term == "1")
      exp = 0;
    else if (term == "x")
      exp = 1;
    else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
      size_t used = 0;
      exp = std::stoi(term.substr(2), &used);
      if (used != term.size() - 2 || exp < 0)
        throw std::invalid_argument("polynomial: bad term '" + term + "'");
    } else {
      throw std::invalid_argument("polynomial: bad term '" + term + "'");
    }
    p.flip_coeff(exp);  // repeated terms cancel, as addition over GF(2) does
  }
  return p;
}

FieldContext::FieldContext(BinaryPolynomial modulus) : modulus_(std::move(modulus)) {
  r_ = modulus_.degree();
  if (r_ < 1 || r_ > 32) throw std::invalid_argument("FieldContext: modulus degree must be in [1, 32]");
  if (!is_primitive(modulus_)) throw std::domain_error("FieldContext: modulus is not primitive");
  modulus_mask_ = modulus_.to_mask();
}

FieldElement FieldContext::element(uint64_t bits) const {
  if (r_ < 64 && (bits >> r_)) throw std::invalid_argument("FieldContext::element: value has more than r bits");
  return FieldElement(bits, modulus_mask_, r_);
}

FieldElement FieldContext::zero() const { return element(0); }
FieldElement FieldContext::one() const { return element(1); }
FieldElement FieldContext::alpha() const {
  return r_ == 1 ? element(modulus_mask_ & 1u) : element(2);  // class of x; x = 1 mod (x+1)
}

void FieldElement::require_same_context(const FieldElement& other) const {
  if (modulus_mask_ != other.modulus_mask_)
    throw std::invalid_argument("FieldElement: context mismatch");
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.require_same_context(b);
  // Carry-less multiply of two r-bit values (r <= 32), then reduce.
  uint64_t prod = 0;
  uint64_t x = a.bits_, y = b.bits_;
  while (y) {
    if (y & 1) prod ^= x;
    x <<= 1;
    y >>= 1;
  }
  const int r = a.r_;
  for (int i = 2 * r - 2; i >= r; --i) {
    if (prod >> i & 1) prod ^= a.modulus_mask_ << (i - r);
  }
  return FieldElement(prod, a.modulus_mask_, r);
}

FieldElement pow(FieldElement a, uint64_t n) {
  FieldElement result(1, a.modulus_mask_, a.r_);
  while (n) {
    if (n & 1) result = result * a;
    a = a * a;
    n >>= 1;
  }
  return result;
}

int trace(const FieldElement& a) {
  FieldElement acc = a;
  FieldElement sq = a;
  for (int j = 1; j < a.r_; ++j) {
    sq = sq * sq;
    acc = acc + sq;
  }
  // The trace is fixed by Frobenius, so it lies in GF(2).
  return static_cast<int>(acc.bits() & 1);
}

}  // namespace lhca::gf2
