#include "weil/rng.hpp"

namespace weil {

Rng::Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

std::uint64_t Rng::next() {
  // splitmix64; stable across platforms and standard libraries.
  s_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(next() % span);
}

Rat Rng::small_rat(int max_num, int max_den) {
  std::int64_t num = uniform(-max_num, max_num);
  std::int64_t den = uniform(1, max_den);
  return rat(num, den);
}

Poly Rng::poly(int arity, int degree, int max_num, int max_den) {
  // Walk all monomials of total degree <= degree via an odometer and keep a
  // sparse random subset.
  Poly p(arity);
  std::vector<int> exps(arity, 0);
  while (true) {
    int total = 0;
    for (int e : exps) total += e;
    if (total <= degree && uniform(0, 2) != 0)
      p.add_term(Monomial(exps), small_rat(max_num, max_den));
    int i = 0;
    for (; i < arity; ++i) {
      if (++exps[i] <= degree) break;
      exps[i] = 0;
    }
    if (i == arity) break;
  }
  return p;
}

std::vector<Rat> Rng::point(int k, int max_num) {
  std::vector<Rat> p;
  p.reserve(k);
  for (int i = 0; i < k; ++i) p.push_back(small_rat(max_num, 2));
  return p;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace weil
