#ifndef SWITCHKIT_BITVEC_HPP
#define SWITCHKIT_BITVEC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace switchkit {

// Fixed-width bit vector with cheap equality and hashing; used for per-vertex
// switch states, so word-packed storage keeps Configuration sets small.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool all_zero() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  void reset() {
    for (auto& w : words_) w = 0;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.bits_ == b.bits_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

  std::uint64_t hash() const {
    // FNV-1a over the words, seeded with the width.
    std::uint64_t h = 1469598103934665603ull ^ bits_;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string to_string() const {
    std::string s(bits_, '0');
    for (std::size_t i = 0; i < bits_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace switchkit

#endif
