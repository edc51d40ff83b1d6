#ifndef WEIL_RNG_HPP
#define WEIL_RNG_HPP

#include <cstdint>
#include <vector>

#include "weil/poly.hpp"

namespace weil {

/// Deterministic generator for randomized verification batches. Draws go
/// through explicit arithmetic on the raw engine output, so a seed pins the
/// whole stream independently of standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  /// Rational with small numerator and denominator; may be zero.
  Rat small_rat(int max_num = 3, int max_den = 3);
  /// Polynomial in `arity` variables of total degree <= degree.
  Poly poly(int arity, int degree, int max_num = 3, int max_den = 2);
  std::vector<Rat> point(int k, int max_num = 4);

 private:
  std::uint64_t s_;
};

/// Stable 64-bit hash for deriving per-check seeds from names.
std::uint64_t fnv1a(const std::string& text);

}  // namespace weil

#endif
