#ifndef SWITCHKIT_BIGNAT_HPP
#define SWITCHKIT_BIGNAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace switchkit {

// Arbitrary-precision natural. Non-negativity is maintained by construction;
// parse_bignat rejects signs.
using BigNat = boost::multiprecision::cpp_int;

inline BigNat parse_bignat(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty number");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("not a decimal natural: '" + std::string(text) + "'");
  return BigNat(std::string(text));
}

inline std::string to_decimal(const BigNat& x) { return x.str(); }

inline BigNat pow2(unsigned e) {
  BigNat x = 1;
  x <<= e;
  return x;
}

// Index of the most significant set bit; requires x >= 1.
inline unsigned floor_log2(const BigNat& x) {
  if (x <= 0)
    throw std::invalid_argument("floor_log2 requires a positive value");
  return boost::multiprecision::msb(x);
}

inline bool bit_at(const BigNat& x, unsigned i) { return boost::multiprecision::bit_test(x, i); }

inline BigNat half_up(const BigNat& x) { return (x + 1) / 2; }
inline BigNat half_down(const BigNat& x) { return x / 2; }

}  // namespace switchkit

#endif
