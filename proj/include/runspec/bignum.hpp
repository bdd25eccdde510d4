#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace runspec {

// Arbitrary-precision nonnegative count. Aggregate run counts grow like 2^n,
// so fixed-width integers only cover toy sizes.
using BigCount = mpz_class;

// Exact rational, kept in lowest terms with a positive denominator.
using ExactRational = mpq_class;

/// 2^exponent as an exact integer.
inline BigCount pow2(std::uint64_t exponent) {
  BigCount result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

/// 2^-exponent as an exact rational.
inline ExactRational pow2_inv(std::uint64_t exponent) {
  ExactRational r(1);
  r /= ExactRational(pow2(exponent));
  return r;
}

/// Reduced fraction numerator/denominator; denominator must be nonzero.
inline ExactRational make_rational(BigCount numerator, BigCount denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  ExactRational r(std::move(numerator), std::move(denominator));
  r.canonicalize();
  return r;
}

inline std::string to_decimal(const BigCount& value) { return value.get_str(); }

// "p/q", or just "p" when the value is integral.
inline std::string to_fraction_string(const ExactRational& value) {
  return value.get_str();
}

}  // namespace runspec
