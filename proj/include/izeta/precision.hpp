#ifndef IZETA_PRECISION_HPP
#define IZETA_PRECISION_HPP

#include <cmath>

namespace izeta {

// Working precision model: a public precision of P decimal digits is carried
// internally as ceil(P*log2(10)) + 32 guard bits.
inline long bits_for_digits(int digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873626)) + 32;
}

inline int digits_for_bits(long bits) {
  return static_cast<int>(std::floor((bits - 32) / 3.3219280948873626));
}

inline constexpr int kMinDigits = 15;

}  // namespace izeta

#endif
