#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ramsey {

// Exact rational arithmetic for densities and harmonic sums. Verdicts feed
// equality assertions in tests, so floating point is never used here.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(std::uint64_t num, std::uint64_t den) {
  return BigRational(BigInt(num), BigInt(den));
}

/// Canonical "p/q" rendering ("0" and integers render without "/1").
inline std::string rational_to_string(const BigRational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ramsey
