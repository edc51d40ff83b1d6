#include "weil/poly.hpp"

#include <stdexcept>

namespace weil {

Poly Poly::constant(int arity, const Rat& c) {
  Poly p(arity);
  p.add_term(Monomial::unit(arity), c);
  return p;
}

Poly Poly::variable(int arity, int i) {
  Poly p(arity);
  p.add_term(Monomial::var(arity, i), Rat(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rat& c) {
  Poly p(m.arity());
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rat Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Poly& Poly::add_term(const Monomial& m, const Rat& c) {
  if (m.arity() != arity_)
    throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return *this;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(arity_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(arity_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(arity_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Rat& c) const {
  Poly r(arity_);
  if (c == 0) return r;
  for (const auto& [mm, k] : terms_) r.terms_.emplace(mm.times(m), c * k);
  return r;
}

Poly Poly::compose(const std::vector<Poly>& images,
                   const MonomialKeep* keep) const {
  if (static_cast<int>(images.size()) != arity_)
    throw std::invalid_argument("compose: wrong image count");
  const int out_arity = images.empty() ? 0 : images.front().arity();
  auto prune = [&](Poly p) {
    return keep ? p.filtered(*keep) : std::move(p);
  };
  Poly result(out_arity);
  for (const auto& [m, c] : terms_) {
    Poly prod = Poly::constant(out_arity, c);
    for (int i = 0; i < arity_ && !prod.is_zero(); ++i) {
      for (int e = 0; e < m.exp(i) && !prod.is_zero(); ++e)
        prod = prune(prod * images[i]);
    }
    result = result + prod;
  }
  return prune(result);
}

Poly Poly::remap(int new_arity, const std::vector<int>& var_map) const {
  Poly r(new_arity);
  for (const auto& [m, c] : terms_)
    r.add_term(m.remap(new_arity, var_map), c);
  return r;
}

Poly Poly::filtered(const MonomialKeep& keep) const {
  Poly r(arity_);
  for (const auto& [m, c] : terms_)
    if (keep(m)) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(arity_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp(var);
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[var] -= 1;
    r.add_term(Monomial(std::move(exps)), c * e);
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("eval: wrong point size");
  Rat total(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < arity_; ++i)
      for (int e = 0; e < m.exp(i); ++e) t *= point[i];
    total += t;
  }
  return total;
}

std::string Poly::str(const std::function<std::string(int)>& var_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += m.str(var_name);
    }
  }
  return out;
}

std::string Poly::str(const std::string& stem) const {
  return str([&](int i) { return stem + std::to_string(i + 1); });
}

}  // namespace weil
