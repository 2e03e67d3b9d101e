#include "lhca/generators.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "lhca/analysis.hpp"

namespace lhca::generators {

LFSRConfig::LFSRConfig(gf2::BinaryPolynomial poly, BitSequence state)
    : poly_(std::move(poly)), state_(std::move(state)) {
  int n = poly_.degree();
  if (n < 1) throw std::invalid_argument("LFSRConfig: polynomial degree must be >= 1");
  if (n > 32) throw std::domain_error("LFSRConfig: degree exceeds primitivity bound (32)");
  if (!gf2::is_primitive(poly_)) throw std::invalid_argument("LFSRConfig: polynomial must be primitive");
  if (state_.size() != static_cast<size_t>(n))
    throw std::invalid_argument("LFSRConfig: state length must equal the degree");
}

namespace {

// Fibonacci-mode shift register: the oldest stage is emitted, the feedback
// bit is the XOR of the stages tapped by the polynomial coefficients.
class Register {
 public:
  explicit Register(const LFSRConfig& cfg) : state_(cfg.state().bits()) {
    const gf2::BinaryPolynomial& p = cfg.poly();
    int n = p.degree();
    for (int j = 1; j <= n; ++j)
      if (p.coeff(n - j)) taps_.push_back(n - j);  // state index of a_{k+n-j}
  }

  int clock() {
    int out = state_.front();
    uint8_t feedback = 0;
    for (int t : taps_) feedback ^= state_[static_cast<size_t>(t)];
    state_.erase(state_.begin());
    state_.push_back(feedback);
    return out;
  }

 private:
  std::vector<uint8_t> state_;
  std::vector<int> taps_;
};

}  // namespace

BitSequence lfsr_sequence(const LFSRConfig& cfg, size_t len) {
  Register reg(cfg);
  BitSequence out;
  for (size_t i = 0; i < len; ++i) out.push_back(reg.clock());
  if (!cfg.state().all_zero())
    out.period = (uint64_t{1} << cfg.poly().degree()) - 1;
  return out;
}

BitSequence shrink_keystream(const ShrinkingConfig& cfg, size_t len) {
  if (cfg.control.state().all_zero())
    throw std::invalid_argument("shrink_keystream: control register must not be all zero");
  Register control(cfg.control);
  Register data(cfg.data);
  BitSequence out;
  while (out.size() < len) {
    int c = control.clock();
    int d = data.clock();
    if (c) out.push_back(d);
  }
  return out;
}

std::optional<ca::CAState> solve_initial_state(const ca::RuleVector& rule, int read_cell,
                                               const BitSequence& target) {
  const size_t L = rule.length();
  if (read_cell < 1 || static_cast<size_t>(read_cell) > L)
    throw std::out_of_range("solve_initial_state: cell index out of range");
  if (target.size() < L)
    throw std::invalid_argument("solve_initial_state: need at least L target bits");

  // The transition matrix is symmetric, so the functional giving output bit t
  // is step^t applied to the read cell's basis state.
  std::vector<std::vector<uint8_t>> rows;
  rows.reserve(L);
  std::vector<uint8_t> basis(L, 0);
  basis[static_cast<size_t>(read_cell) - 1] = 1;
  ca::CAState v{std::vector<uint8_t>(basis)};
  for (size_t t = 0; t < L; ++t) {
    std::vector<uint8_t> row = v.cells();
    row.push_back(static_cast<uint8_t>(target[t]));  // augmented column
    rows.push_back(std::move(row));
    v = ca::step(rule, v);
  }

  // Gaussian elimination over GF(2).
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < L && rank < L; ++col) {
    size_t pivot = rank;
    while (pivot < L && rows[pivot][col] == 0) ++pivot;
    if (pivot == L) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = 0; i < L; ++i) {
      if (i != rank && rows[i][col]) {
        for (size_t j = col; j <= L; ++j) rows[i][j] ^= rows[rank][j];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < L; ++i)
    if (rows[i][L]) return std::nullopt;  // inconsistent

  std::vector<uint8_t> solution(L, 0);  // free variables stay 0
  for (size_t i = 0; i < rank; ++i) solution[pivot_col[i]] = rows[i][L];
  return ca::CAState(std::move(solution));
}

CAModel linearize(const BitSequence& keystream) {
  analysis::LinearProfile lp = analysis::berlekamp_massey(keystream);
  if (lp.lc == 0) throw OutsideModelClassError("linearize: window is all zero");
  if (keystream.size() < 2 * static_cast<size_t>(lp.lc))
    throw std::invalid_argument("linearize: window shorter than twice the linear complexity");

  auto power = analysis::detect_primitive_power(lp.minimal_poly);
  if (!power)
    throw OutsideModelClassError(
        "linearize: minimal polynomial is not a power of a primitive polynomial");

  auto [basic, basic_rev] = ca::synthesize(power->base);
  ca::RuleVector rule = ca::concat_to_multiplicity(basic, static_cast<uint64_t>(power->multiplicity));
  ca::RuleVector rule_rev =
      ca::concat_to_multiplicity(basic_rev, static_cast<uint64_t>(power->multiplicity));

  for (const ca::RuleVector& candidate : {rule, rule_rev}) {
    const size_t L = candidate.length();
    for (int cell = 1; cell <= static_cast<int>(L); ++cell) {
      auto state = solve_initial_state(candidate, cell, keystream);
      if (!state) continue;
      if (ca::run_column(candidate, *state, cell, keystream.size()) == keystream)
        return CAModel{candidate, *state, cell};
    }
  }
  throw std::runtime_error("linearize: no cell of either automaton realizes the keystream");
}

uint64_t model_period(const CAModel& model) {
  // All states of a concatenated-primitive automaton lie on cycles, so the
  // state walk closes; cap it by the order of x modulo the minimal polynomial.
  auto power = analysis::detect_primitive_power(ca::char_poly(model.rule));
  if (!power) throw std::invalid_argument("model_period: rule is not a primitive-power automaton");
  uint64_t cap = ((uint64_t{1} << power->base.degree()) - 1) *
                 std::bit_ceil(static_cast<uint64_t>(power->multiplicity));

  uint64_t state_period = 0;
  ca::CAState cur = model.initial_state;
  do {
    cur = ca::step(model.rule, cur);
    if (++state_period > cap) throw std::logic_error("model_period: state walk failed to close");
  } while (!(cur == model.initial_state));

  BitSequence window =
      ca::run_column(model.rule, model.initial_state, model.read_cell, 2 * state_period);
  return analysis::minimal_period(window);
}

}  // namespace lhca::generators
