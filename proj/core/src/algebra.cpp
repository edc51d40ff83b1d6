#include "weil/algebra.hpp"

#include <algorithm>

#include "weil/errors.hpp"

namespace weil {

namespace {

// Staircase search: grow exponent vectors variable by variable, pruning any
// branch whose prefix already fell into the ideal. Monomial ideals make the
// divisibility test sufficient; no Groebner machinery is needed.
void enumerate(const InfinitesimalObject& obj, int var, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == obj.var_count()) {
    out.emplace_back(exps);
    return;
  }
  for (int e = 0; e < obj.caps()[var]; ++e) {
    exps[var] = e;
    Monomial prefix(exps);
    if (!obj.in_ideal(prefix)) enumerate(obj, var + 1, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

WeilAlgebra::WeilAlgebra(InfinitesimalObject obj) : object_(std::move(obj)) {
  std::vector<int> exps(object_.var_count(), 0);
  enumerate(object_, 0, exps, basis_);
  std::sort(basis_.begin(), basis_.end());
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
    index_.emplace(basis_[i], i);
}

int WeilAlgebra::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

AlgebraPtr algebra_of(const InfinitesimalObject& obj) {
  return std::make_shared<WeilAlgebra>(obj);
}

AlgebraPtr product_algebra(const WeilAlgebra& a, const WeilAlgebra& b) {
  return algebra_of(product_object(a.object(), b.object()));
}

WeilElement::WeilElement(AlgebraPtr algebra, Poly value)
    : algebra_(std::move(algebra)), value_(std::move(value)) {
  if (value_.arity() != algebra_->object().var_count())
    throw MismatchError("element arity does not match algebra");
  const auto& obj = algebra_->object();
  value_ = value_.filtered([&obj](const Monomial& m) { return !obj.in_ideal(m); });
}

WeilElement WeilElement::zero(AlgebraPtr a) {
  int n = a->object().var_count();
  return WeilElement(std::move(a), Poly::zero(n));
}

WeilElement WeilElement::one(AlgebraPtr a) { return constant(std::move(a), Rat(1)); }

WeilElement WeilElement::constant(AlgebraPtr a, const Rat& c) {
  int n = a->object().var_count();
  return WeilElement(std::move(a), Poly::constant(n, c));
}

WeilElement WeilElement::variable(AlgebraPtr a, int i) {
  int n = a->object().var_count();
  return WeilElement(std::move(a), Poly::variable(n, i));
}

WeilElement WeilElement::from_coords(AlgebraPtr a, const std::vector<Rat>& coords) {
  if (static_cast<int>(coords.size()) != a->dim())
    throw MismatchError("coordinate vector length does not match dimension");
  Poly p(a->object().var_count());
  for (int i = 0; i < a->dim(); ++i) p.add_term(a->basis()[i], coords[i]);
  return WeilElement(std::move(a), std::move(p));
}

std::vector<Rat> WeilElement::coords() const {
  std::vector<Rat> out(algebra_->dim(), Rat(0));
  for (const auto& [m, c] : value_.terms()) out[algebra_->index_of(m)] = c;
  return out;
}

void WeilElement::check_same(const WeilElement& o) const {
  if (!algebra_ || !o.algebra_) throw MismatchError("uninitialized element");
  if (algebra_ == o.algebra_) return;
  if (!(*algebra_ == *o.algebra_)) throw MismatchError("algebra mismatch");
}

WeilElement WeilElement::operator+(const WeilElement& o) const {
  check_same(o);
  return WeilElement(algebra_, value_ + o.value_);
}

WeilElement WeilElement::operator-(const WeilElement& o) const {
  check_same(o);
  return WeilElement(algebra_, value_ - o.value_);
}

WeilElement WeilElement::operator*(const WeilElement& o) const {
  check_same(o);
  return WeilElement(algebra_, value_ * o.value_);
}

WeilElement WeilElement::scaled(const Rat& c) const {
  return WeilElement(algebra_, value_.scaled(c));
}

bool WeilElement::operator==(const WeilElement& o) const {
  check_same(o);
  return value_ == o.value_;
}

WeilElement elem_linear(const WeilElement& a, const WeilElement& b, const Rat& alpha,
                        const Rat& beta) {
  return a.scaled(alpha) + b.scaled(beta);
}

WeilElement elem_mul(const WeilElement& a, const WeilElement& b) { return a * b; }

}  // namespace weil
