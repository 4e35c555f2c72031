#pragma once

#include <gmpxx.h>

#include <string>

namespace symcensus {

// Group orders routinely exceed 64 bits (wreath-type automorphism groups of
// twin-expanded cycles reach 2^n * 2n), so orders are arbitrary precision
// throughout.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline bool is_power_of_two(const BigInt& v) {
  if (v <= 0) return false;
  return mpz_popcount(v.get_mpz_t()) == 1;
}

}  // namespace symcensus
