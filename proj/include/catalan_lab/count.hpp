#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace catalan_lab {

// Arbitrary-precision nonnegative integer used for every total.
using Count = mpz_class;

inline std::string to_string(const Count& c) { return c.get_str(); }

inline Count make_count(std::uint64_t v) {
  Count c;
  mpz_import(c.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return c;
}

}  // namespace catalan_lab
