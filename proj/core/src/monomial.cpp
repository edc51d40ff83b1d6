#include "weil/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace weil {

Monomial Monomial::var(int arity, int i, int exp) {
  Monomial m(arity);
  m.e_.at(i) = exp;
  return m;
}

int Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::divides(const Monomial& m) const {
  if (arity() != m.arity()) return false;
  for (int i = 0; i < arity(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial r = *this;
  for (int i = 0; i < arity(); ++i) r.e_[i] += m.e_[i];
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r = *this;
  for (int i = 0; i < arity(); ++i) r.e_[i] *= k;
  return r;
}

Monomial Monomial::remap(int new_arity, const std::vector<int>& var_map) const {
  Monomial r(new_arity);
  for (int i = 0; i < arity(); ++i) {
    if (e_[i] == 0) continue;
    r.e_.at(var_map.at(i)) += e_[i];
  }
  return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Graded lex: among equal degrees, weight towards earlier variables first,
  // so bases enumerate as 1 < d1 < d2 < d1^2 < d1*d2 < d2^2 < ...
  for (int i = 0; i < a.arity(); ++i) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] > b.e_[i] ? -1 : 1;
  }
  return 0;
}

std::string Monomial::str(const std::function<std::string(int)>& var_name) const {
  std::string out;
  for (int i = 0; i < arity(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Monomial::str(const std::string& stem) const {
  return str([&](int i) { return stem + std::to_string(i + 1); });
}

}  // namespace weil
