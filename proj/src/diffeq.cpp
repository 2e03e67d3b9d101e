#include "lhca/diffeq.hpp"

#include <bit>
#include <stdexcept>

#include "lhca/analysis.hpp"

namespace lhca::diffeq {

DifferenceEquation::DifferenceEquation(gf2::BinaryPolynomial base, uint64_t multiplicity)
    : base_(std::move(base)), p_(multiplicity), context_(base_) {
  if (p_ < 1) throw std::invalid_argument("DifferenceEquation: multiplicity must be >= 1");
}

gf2::BinaryPolynomial DifferenceEquation::characteristic_poly() const {
  return gf2::pow(base_, p_);
}

SolutionCoeffs::SolutionCoeffs(std::vector<gf2::FieldElement> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("SolutionCoeffs: need at least one coefficient");
}

SolutionCoeffs SolutionCoeffs::from_masks(const DifferenceEquation& eq,
                                          const std::vector<uint64_t>& masks) {
  if (masks.size() != eq.multiplicity())
    throw std::invalid_argument("SolutionCoeffs: need exactly p coefficients");
  std::vector<gf2::FieldElement> coeffs;
  coeffs.reserve(masks.size());
  for (uint64_t m : masks) coeffs.push_back(eq.context().element(m));
  return SolutionCoeffs(std::move(coeffs));
}

bool SolutionCoeffs::all_zero() const {
  for (const auto& a : coeffs_)
    if (!a.is_zero()) return false;
  return true;
}

int SolutionCoeffs::class_index() const {
  for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
    if (!coeffs_[static_cast<size_t>(i)].is_zero()) return i;
  return -1;
}

int binomial_bit(uint64_t n, uint64_t i) { return (n & i) == i ? 1 : 0; }

uint64_t binomial_period(uint64_t i) {
  return std::bit_ceil(i + 1);  // smallest power of two > i
}

namespace {

void require_match(const DifferenceEquation& eq, const SolutionCoeffs& coeffs) {
  if (coeffs.size() != eq.multiplicity())
    throw std::invalid_argument("solution coefficients: need exactly p entries");
  for (const auto& a : coeffs.coeffs())
    if (a.modulus_mask() != eq.context().modulus_mask())
      throw std::invalid_argument("solution coefficients: context mismatch");
}

int term_at(const SolutionCoeffs& coeffs, uint64_t n, const gf2::FieldElement& alpha_n) {
  int bit = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero() || !binomial_bit(n, i)) continue;
    bit ^= trace(coeffs[i] * alpha_n);
  }
  return bit;
}

}  // namespace

int solution_term(const DifferenceEquation& eq, const SolutionCoeffs& coeffs, uint64_t n) {
  require_match(eq, coeffs);
  return term_at(coeffs, n, pow(eq.context().alpha(), n));
}

BitSequence solution_sequence(const DifferenceEquation& eq, const SolutionCoeffs& coeffs,
                              size_t len) {
  require_match(eq, coeffs);
  BitSequence out;
  gf2::FieldElement alpha = eq.context().alpha();
  gf2::FieldElement alpha_n = eq.context().one();
  for (size_t n = 0; n < len; ++n) {
    out.push_back(term_at(coeffs, n, alpha_n));
    alpha_n = alpha_n * alpha;
  }
  return out;
}

BitSequence recurrence_sequence(const gf2::BinaryPolynomial& charpoly, const BitSequence& seed,
                                size_t len) {
  int degree = charpoly.degree();
  if (degree < 1) throw std::invalid_argument("recurrence_sequence: degree must be >= 1");
  if (seed.size() != static_cast<size_t>(degree))
    throw std::invalid_argument("recurrence_sequence: seed length must equal the degree");

  // Tap positions: a_n = sum_j c_j a_{n-j} with c_j the coefficient of x^(d-j).
  std::vector<int> taps;
  for (int j = 1; j <= degree; ++j)
    if (charpoly.coeff(degree - j)) taps.push_back(j);

  BitSequence out;
  for (size_t n = 0; n < len; ++n) {
    if (n < seed.size()) {
      out.push_back(seed[n]);
      continue;
    }
    int bit = 0;
    for (int j : taps) bit ^= out[n - static_cast<size_t>(j)];
    out.push_back(bit);
  }
  return out;
}

SolutionProfile profile(const DifferenceEquation& eq, const SolutionCoeffs& coeffs) {
  require_match(eq, coeffs);
  int cls = coeffs.class_index();
  if (cls < 0) throw std::invalid_argument("profile: the zero solution has no profile");

  const uint64_t pn_period = (uint64_t{1} << eq.r()) - 1;
  const uint64_t class_period = binomial_period(static_cast<uint64_t>(cls)) * pn_period;
  if (class_period > (uint64_t{1} << 24))
    throw std::domain_error("profile: measurement window exceeds desk-scale bound");
  BitSequence bits = solution_sequence(eq, coeffs, static_cast<size_t>(4 * class_period));

  SolutionProfile out;
  out.class_index = cls;
  out.period = analysis::minimal_period(bits);
  out.linear_complexity = analysis::berlekamp_massey(bits).lc;
  if (class_period % out.period != 0)
    throw std::logic_error("profile: measured period does not divide the class period");
  return out;
}

uint64_t count_solution_classes(const DifferenceEquation& eq, int class_index) {
  if (class_index < 0 || static_cast<uint64_t>(class_index) >= eq.multiplicity())
    throw std::out_of_range("count_solution_classes: class index out of range");
  // 2^(r*i) free lower coefficients times (2^r - 1) nonzero choices of A_i,
  // divided by the class period T_i * (2^r - 1).
  uint64_t i = static_cast<uint64_t>(class_index);
  uint64_t free_tuples_log2 = static_cast<uint64_t>(eq.r()) * i;
  uint64_t t_i = binomial_period(i);
  if (free_tuples_log2 >= 64)
    throw std::domain_error("count_solution_classes: count exceeds 64 bits");
  return (uint64_t{1} << free_tuples_log2) / t_i;
}

}  // namespace lhca::diffeq
