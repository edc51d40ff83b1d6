#ifndef WEIL_RATIONAL_HPP
#define WEIL_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace weil {

/// Exact rational scalar. Every identity the engine checks is an exact
/// polynomial identity, so there is no floating-point mode.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Rough operand size (bits of numerator plus denominator); used only to
/// steer pivot selection in exact elimination.
inline std::size_t rat_bits(const Rat& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

}  // namespace weil

#endif
