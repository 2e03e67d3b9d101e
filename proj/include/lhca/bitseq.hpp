#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lhca {

/// A finite binary sequence a_0, a_1, ..., a_{n-1}.
///
/// Text form is a string of '0'/'1' characters, leftmost character = a_0.
/// The optional period / linear-complexity fields are annotations about the
/// underlying infinite sequence; they are ignored by operator==.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t b : bits_) {
      if (b > 1) throw std::invalid_argument("BitSequence: entries must be 0 or 1");
    }
  }
  BitSequence(std::initializer_list<uint8_t> bits)
      : BitSequence(std::vector<uint8_t>(bits)) {}

  static BitSequence zeros(size_t n) { return BitSequence(std::vector<uint8_t>(n, 0)); }

  static BitSequence parse(std::string_view s) {
    std::vector<uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("bit string: expected only '0'/'1'");
      bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    return BitSequence(std::move(bits));
  }

  size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](size_t i) const { return bits_[i]; }
  void push_back(int bit) { bits_.push_back(static_cast<uint8_t>(bit & 1)); }
  const std::vector<uint8_t>& bits() const { return bits_; }

  bool all_zero() const {
    for (uint8_t b : bits_)
      if (b) return false;
    return true;
  }

  BitSequence slice(size_t from, size_t len) const {
    if (from + len > bits_.size()) throw std::out_of_range("BitSequence::slice");
    return BitSequence(std::vector<uint8_t>(bits_.begin() + static_cast<long>(from),
                                            bits_.begin() + static_cast<long>(from + len)));
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (size_t i = 0; i < bits_.size(); ++i) s[i] += bits_[i];
    return s;
  }

  friend BitSequence operator^(const BitSequence& a, const BitSequence& b) {
    if (a.size() != b.size()) throw std::invalid_argument("BitSequence xor: length mismatch");
    std::vector<uint8_t> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a.bits_[i] ^ b.bits_[i];
    return BitSequence(std::move(out));
  }

  friend bool operator==(const BitSequence& a, const BitSequence& b) {
    return a.bits_ == b.bits_;
  }

  std::optional<uint64_t> period;            // period of the underlying sequence, if known
  std::optional<int> linear_complexity;

 private:
  std::vector<uint8_t> bits_;
};

}  // namespace lhca
