#include "lhca/ca.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <memory>
#include <stdexcept>
#include <thread>

namespace lhca::ca {

namespace {

uint64_t bit_reverse64(uint64_t v) {
  v = ((v >> 1) & 0x5555555555555555ull) | ((v & 0x5555555555555555ull) << 1);
  v = ((v >> 2) & 0x3333333333333333ull) | ((v & 0x3333333333333333ull) << 2);
  v = ((v >> 4) & 0x0f0f0f0f0f0f0f0full) | ((v & 0x0f0f0f0f0f0f0f0full) << 4);
  v = ((v >> 8) & 0x00ff00ff00ff00ffull) | ((v & 0x00ff00ff00ff00ffull) << 8);
  v = ((v >> 16) & 0x0000ffff0000ffffull) | ((v & 0x0000ffff0000ffffull) << 16);
  return (v >> 32) | (v << 32);
}

// One synchronous update with cell 1 in bit 0 and null boundaries.
inline uint64_t word_step(uint64_t s, uint64_t rule150_mask, uint64_t state_mask) {
  return ((s << 1) ^ (s >> 1) ^ (s & rule150_mask)) & state_mask;
}

std::vector<uint8_t> parse_bits(std::string_view s, const char* what) {
  std::vector<uint8_t> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument(std::string(what) + ": expected only '0'/'1'");
    out.push_back(static_cast<uint8_t>(c - '0'));
  }
  return out;
}

std::string bits_to_string(const std::vector<uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (size_t i = 0; i < bits.size(); ++i) s[i] += bits[i];
  return s;
}

uint64_t bits_to_mask(const std::vector<uint8_t>& bits, const char* what) {
  if (bits.size() > 64) throw std::domain_error(std::string(what) + ": length exceeds 64");
  uint64_t mask = 0;
  for (size_t i = 0; i < bits.size(); ++i) mask |= static_cast<uint64_t>(bits[i]) << i;
  return mask;
}

// Symmetry of an L-bit state given as a word; odd lengths carry no class.
SymmetryClass classify_mask(uint64_t s, int L) {
  if (L % 2 != 0) return SymmetryClass::other;
  bool palindrome = (bit_reverse64(s) >> (64 - L)) == s;
  uint64_t half_mask = (uint64_t{1} << (L / 2)) - 1;
  bool repetition = (s >> (L / 2)) == (s & half_mask);
  if (palindrome && repetition) return SymmetryClass::doubly_symmetric;
  if (palindrome) return SymmetryClass::symmetric;
  if (repetition) return SymmetryClass::repetitive;
  return SymmetryClass::other;
}

struct GroupAccumulator {
  uint64_t count = 0;
  uint64_t states[4] = {0, 0, 0, 0};
};

using LengthMap = std::map<uint64_t, GroupAccumulator>;

void merge_into(LengthMap& dst, const LengthMap& src) {
  for (const auto& [len, acc] : src) {
    GroupAccumulator& g = dst[len];
    g.count += acc.count;
    for (int i = 0; i < 4; ++i) g.states[i] += acc.states[i];
  }
}

}  // namespace

RuleVector::RuleVector(std::vector<uint8_t> d) : d_(std::move(d)) {
  if (d_.empty()) throw std::invalid_argument("RuleVector: length must be >= 1");
  for (uint8_t b : d_)
    if (b > 1) throw std::invalid_argument("RuleVector: entries must be 0 or 1");
}

RuleVector RuleVector::parse(std::string_view s) { return RuleVector(parse_bits(s, "rule vector")); }
std::string RuleVector::to_string() const { return bits_to_string(d_); }
uint64_t RuleVector::to_mask() const { return bits_to_mask(d_, "rule vector"); }

CAState::CAState(std::vector<uint8_t> cells) : cells_(std::move(cells)) {
  for (uint8_t b : cells_)
    if (b > 1) throw std::invalid_argument("CAState: entries must be 0 or 1");
}

CAState CAState::parse(std::string_view s) { return CAState(parse_bits(s, "state")); }

CAState CAState::from_mask(uint64_t mask, size_t length) {
  if (length > 64) throw std::domain_error("CAState::from_mask: length exceeds 64");
  std::vector<uint8_t> cells(length);
  for (size_t i = 0; i < length; ++i) cells[i] = (mask >> i) & 1;
  return CAState(std::move(cells));
}

std::string CAState::to_string() const { return bits_to_string(cells_); }
uint64_t CAState::to_mask() const { return bits_to_mask(cells_, "state"); }

bool CAState::all_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](uint8_t b) { return b == 0; });
}

CAState operator^(const CAState& a, const CAState& b) {
  if (a.length() != b.length()) throw std::invalid_argument("CAState xor: length mismatch");
  std::vector<uint8_t> out(a.length());
  for (size_t i = 0; i < out.size(); ++i) out[i] = a.cells_[i] ^ b.cells_[i];
  return CAState(std::move(out));
}

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::doubly_symmetric: return "doubly_symmetric";
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::repetitive: return "repetitive";
    case SymmetryClass::other: return "other";
  }
  return "other";
}

const CycleGroup* CycleCensus::find_length(uint64_t length) const {
  for (const CycleGroup& g : groups)
    if (g.length == length) return &g;
  return nullptr;
}

CAState step(const RuleVector& rule, const CAState& s) {
  const size_t L = rule.length();
  if (s.length() != L) throw std::invalid_argument("step: rule/state length mismatch");
  std::vector<uint8_t> next(L);
  for (size_t k = 0; k < L; ++k) {
    uint8_t left = k > 0 ? static_cast<uint8_t>(s[k - 1]) : 0;
    uint8_t right = k + 1 < L ? static_cast<uint8_t>(s[k + 1]) : 0;
    uint8_t self = rule[k] ? static_cast<uint8_t>(s[k]) : 0;
    next[k] = left ^ right ^ self;
  }
  return CAState(std::move(next));
}

BitSequence run_column(const RuleVector& rule, const CAState& s0, int cell_index, size_t len) {
  const size_t L = rule.length();
  if (s0.length() != L) throw std::invalid_argument("run_column: rule/state length mismatch");
  if (cell_index < 1 || static_cast<size_t>(cell_index) > L)
    throw std::out_of_range("run_column: cell index out of range");
  std::vector<uint8_t> column;
  column.reserve(len);
  if (L <= 64) {
    const uint64_t m150 = rule.to_mask();
    const uint64_t mask = L == 64 ? ~uint64_t{0} : (uint64_t{1} << L) - 1;
    uint64_t cur = s0.to_mask();
    for (size_t n = 0; n < len; ++n) {
      column.push_back((cur >> (cell_index - 1)) & 1);
      cur = word_step(cur, m150, mask);
    }
  } else {
    CAState cur = s0;
    for (size_t n = 0; n < len; ++n) {
      column.push_back(static_cast<uint8_t>(cur[static_cast<size_t>(cell_index) - 1]));
      cur = step(rule, cur);
    }
  }
  return BitSequence(std::move(column));
}

gf2::BinaryPolynomial char_poly(const RuleVector& rule) {
  gf2::BinaryPolynomial prev = gf2::BinaryPolynomial::one();  // P_0
  gf2::BinaryPolynomial prev2;                                // P_{-1} = 0
  for (size_t k = 0; k < rule.length(); ++k) {
    gf2::BinaryPolynomial next = prev.shifted(1);
    if (rule[k]) next += prev;
    next += prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

RuleVector reverse(const RuleVector& rule) {
  std::vector<uint8_t> d(rule.rules().rbegin(), rule.rules().rend());
  return RuleVector(std::move(d));
}

RuleVector concat_double(const RuleVector& rule) {
  std::vector<uint8_t> half = rule.rules();
  half.back() ^= 1;
  std::vector<uint8_t> d = half;
  d.insert(d.end(), half.rbegin(), half.rend());
  return RuleVector(std::move(d));
}

RuleVector concat_to_multiplicity(const RuleVector& rule, uint64_t p) {
  if (p < 1) throw std::invalid_argument("concat_to_multiplicity: p must be >= 1");
  int q = p == 1 ? 0 : std::bit_width(p - 1);
  if (q > 24 || (rule.length() << q) > (uint64_t{1} << 24))
    throw std::domain_error("concat_to_multiplicity: resulting automaton too long");
  RuleVector out = rule;
  for (int i = 0; i < q; ++i) out = concat_double(out);
  return out;
}

namespace {

// Depth-first search over rule bits with the characteristic polynomial
// recurrence carried incrementally; the 0-branch is explored first, so the
// first hit is the lexicographically smallest rule vector.
bool synth_search(int depth, int target_degree, uint64_t target, uint64_t pk, uint64_t pk_prev,
                  std::vector<uint8_t>& prefix) {
  if (depth == target_degree) return pk == target;
  for (uint8_t d : {uint8_t{0}, uint8_t{1}}) {
    uint64_t next = (pk << 1) ^ (d ? pk : 0) ^ pk_prev;
    prefix.push_back(d);
    if (synth_search(depth + 1, target_degree, target, next, pk, prefix)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

std::pair<RuleVector, RuleVector> synthesize(const gf2::BinaryPolynomial& p) {
  int r = p.degree();
  if (r < 1) throw std::invalid_argument("synthesize: polynomial degree must be >= 1");
  if (r > 24) throw std::domain_error("synthesize: degree exceeds search bound (24)");
  if (!gf2::is_primitive(p)) throw std::invalid_argument("synthesize: polynomial must be primitive");

  std::vector<uint8_t> prefix;
  prefix.reserve(static_cast<size_t>(r));
  if (!synth_search(0, r, p.to_mask(), 1, 0, prefix))
    throw std::runtime_error("synthesize: no automaton found for a primitive polynomial");
  RuleVector rule(std::move(prefix));
  RuleVector rev = reverse(rule);
  if (!(char_poly(rev) == p))
    throw std::runtime_error("synthesize: reversal does not share the characteristic polynomial");
  return {rule, rev};
}

SymmetryClass classify_state(const CAState& s) {
  const size_t L = s.length();
  if (L % 2 != 0) throw std::domain_error("classify_state: length must be even");
  const auto& c = s.cells();
  bool palindrome = std::equal(c.begin(), c.begin() + static_cast<long>(L / 2), c.rbegin());
  bool repetition =
      std::equal(c.begin(), c.begin() + static_cast<long>(L / 2), c.begin() + static_cast<long>(L / 2));
  if (palindrome && repetition) return SymmetryClass::doubly_symmetric;
  if (palindrome) return SymmetryClass::symmetric;
  if (repetition) return SymmetryClass::repetitive;
  return SymmetryClass::other;
}

namespace {

constexpr unsigned kCensusMaxLength = 26;

LengthMap census_walk_range(uint64_t lo, uint64_t hi, uint64_t n, int L, uint64_t m150,
                            uint64_t state_mask, std::atomic<uint64_t>* visited, bool parallel) {
  LengthMap local;
  for (uint64_t s = lo; s < hi; ++s) {
    if (visited[s >> 6].load(std::memory_order_relaxed) >> (s & 63) & 1) continue;
    if (parallel) {
      // Only the minimal state of a cycle claims it; bail out on any smaller
      // state (or one already marked, which implies an owner below s).
      uint64_t cur = word_step(s, m150, state_mask);
      bool owner = true;
      while (cur != s) {
        if (cur < s || (visited[cur >> 6].load(std::memory_order_relaxed) >> (cur & 63) & 1)) {
          owner = false;
          break;
        }
        cur = word_step(cur, m150, state_mask);
      }
      if (!owner) continue;
    }
    GroupAccumulator* acc = nullptr;
    uint64_t length = 0;
    uint64_t hist[4] = {0, 0, 0, 0};
    uint64_t cur = s;
    do {
      visited[cur >> 6].fetch_or(uint64_t{1} << (cur & 63), std::memory_order_relaxed);
      hist[static_cast<int>(classify_mask(cur, L))]++;
      cur = word_step(cur, m150, state_mask);
      if (++length > n) throw std::logic_error("cycle_census: walk failed to close");
    } while (cur != s);
    acc = &local[length];
    acc->count++;
    for (int i = 0; i < 4; ++i) acc->states[i] += hist[i];
  }
  return local;
}

}  // namespace

CycleCensus cycle_census(const RuleVector& rule, unsigned threads) {
  const size_t L = rule.length();
  if (L > kCensusMaxLength)
    throw std::domain_error("cycle_census: state space exceeds enumeration bound (L <= 26)");
  if (threads == 0) threads = 1;

  // The step map is linear; it is a bijection iff the transition matrix has
  // determinant 1, which is the constant term of the characteristic polynomial.
  if (!char_poly(rule).coeff(0))
    throw std::domain_error("cycle_census: step map is not a bijection (determinant 0)");

  const uint64_t n = uint64_t{1} << L;
  const uint64_t m150 = rule.to_mask();
  const uint64_t state_mask = n - 1;

  const size_t words = static_cast<size_t>((n + 63) / 64);
  std::unique_ptr<std::atomic<uint64_t>[]> visited(new std::atomic<uint64_t>[words]);
  for (size_t i = 0; i < words; ++i) visited[i].store(0, std::memory_order_relaxed);

  LengthMap merged;
  if (threads == 1 || n < 4096) {
    merged = census_walk_range(0, n, n, static_cast<int>(L), m150, state_mask, visited.get(),
                               /*parallel=*/false);
  } else {
    std::vector<LengthMap> partial(threads);
    std::vector<std::thread> workers;
    uint64_t chunk = n / threads;
    for (unsigned t = 0; t < threads; ++t) {
      uint64_t lo = t * chunk;
      uint64_t hi = (t + 1 == threads) ? n : lo + chunk;
      workers.emplace_back([&, t, lo, hi] {
        partial[t] = census_walk_range(lo, hi, n, static_cast<int>(L), m150, state_mask,
                                       visited.get(), /*parallel=*/true);
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& part : partial) merge_into(merged, part);
  }

  CycleCensus census;
  census.L = L;
  census.total_states = n;
  uint64_t covered = 0;
  for (const auto& [length, acc] : merged) {
    CycleGroup g;
    g.length = length;
    g.count = acc.count;
    g.symmetry[SymmetryClass::doubly_symmetric] = acc.states[0];
    g.symmetry[SymmetryClass::symmetric] = acc.states[1];
    g.symmetry[SymmetryClass::repetitive] = acc.states[2];
    g.symmetry[SymmetryClass::other] = acc.states[3];
    covered += length * acc.count;
    census.groups.push_back(std::move(g));
  }
  if (covered != n) throw std::logic_error("cycle_census: states not conserved");
  return census;
}

}  // namespace lhca::ca
