#pragma once

// Test-side reference computations that do not go through the library's
// number types.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace oracle {

// 50 digits of √2 (well-known constant), for decimal enclosures.
inline const char* kSqrt2Digits = "1.41421356237309504880168872420969807856967187537694";

// floor(x * 10^digits) for x = a + b√2 with integer a, b, computed with GMP
// integer square roots: b√2 * 10^d = sqrt(2 b^2 10^{2d}) with sign of b.
inline mpz_class scaled_floor(long a, long b, unsigned digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class rad = 2 * mpz_class(b) * mpz_class(b) * scale * scale;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), rad.get_mpz_t());
  const bool exact = r * r == rad;
  mpz_class part = b >= 0 ? r : -(r + (exact ? 0 : 1));
  return mpz_class(a) * scale + part;
}

inline std::uint64_t seed() {
  if (const char* s = std::getenv("OCTOCF_SEED")) return std::stoull(s);
  return 20240611;
}

}  // namespace oracle
