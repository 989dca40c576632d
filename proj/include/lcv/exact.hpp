#pragma once

#include <gmpxx.h>

#include <string>

namespace lcv {

// Exact arithmetic is backed by GMP. mpq_class keeps values canonical
// (lowest terms, positive denominator) after every arithmetic operation.
using ExactInt = mpz_class;
using ExactRat = mpq_class;

inline std::string to_string(const ExactInt& v) { return v.get_str(); }

/// "num/den" in lowest terms, or just "num" for integers.
inline std::string to_string(const ExactRat& v) { return v.get_str(); }

inline ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  ExactRat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const ExactRat& v) { return v.get_den() == 1; }

}  // namespace lcv
