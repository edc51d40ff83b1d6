#include "weil/hom.hpp"

#include "weil/errors.hpp"

namespace weil {

AlgebraHom::AlgebraHom(AlgebraPtr domain, AlgebraPtr codomain,
                       std::vector<WeilElement> var_images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      var_images_(std::move(var_images)) {
  if (static_cast<int>(var_images_.size()) != domain_->object().var_count())
    throw MismatchError("hom: one image per domain variable required");
  for (const auto& img : var_images_) {
    if (!(*img.algebra() == *codomain_))
      throw MismatchError("hom: image lies in the wrong algebra");
    if (img.augmentation() != 0)
      throw NonzeroConstantTerm("hom: variable image has nonzero augmentation");
  }
  matrix_ = Mat(codomain_->dim(), domain_->dim());
  for (int j = 0; j < domain_->dim(); ++j) {
    const Monomial& m = domain_->basis()[j];
    WeilElement img = WeilElement::one(codomain_);
    for (int v = 0; v < domain_->object().var_count() && !img.is_zero(); ++v)
      for (int e = 0; e < m.exp(v) && !img.is_zero(); ++e)
        img = img * var_images_[v];
    std::vector<Rat> col = img.coords();
    for (int i = 0; i < codomain_->dim(); ++i) matrix_.at(i, j) = col[i];
  }
}

AlgebraHom AlgebraHom::identity(AlgebraPtr a) {
  std::vector<WeilElement> images;
  for (int i = 0; i < a->object().var_count(); ++i)
    images.push_back(WeilElement::variable(a, i));
  return AlgebraHom(a, a, std::move(images));
}

WeilElement AlgebraHom::apply(const WeilElement& x) const {
  if (!(*x.algebra() == *domain_)) throw MismatchError("hom_apply: domain mismatch");
  Vec out = mat_apply(matrix_, x.coords());
  return WeilElement::from_coords(codomain_, out);
}

bool AlgebraHom::is_multiplicative() const {
  WeilElement unit = WeilElement::one(domain_);
  if (!(apply(unit) == WeilElement::one(codomain_))) return false;
  for (int i = 0; i < domain_->dim(); ++i) {
    WeilElement a = WeilElement::from_coords(domain_, [&] {
      std::vector<Rat> c(domain_->dim(), Rat(0));
      c[i] = 1;
      return c;
    }());
    for (int j = i; j < domain_->dim(); ++j) {
      WeilElement b = WeilElement::from_coords(domain_, [&] {
        std::vector<Rat> c(domain_->dim(), Rat(0));
        c[j] = 1;
        return c;
      }());
      if (!(apply(a * b) == apply(a) * apply(b))) return false;
    }
  }
  return true;
}

bool AlgebraHom::operator==(const AlgebraHom& o) const {
  return *domain_ == *o.domain_ && *codomain_ == *o.codomain_ && matrix_ == o.matrix_;
}

AlgebraHom induced_hom(const InfinitesimalMap& phi) {
  AlgebraPtr dom = algebra_of(phi.target());
  AlgebraPtr cod = algebra_of(phi.source());
  std::vector<WeilElement> images;
  images.reserve(phi.components().size());
  for (const auto& c : phi.components()) images.emplace_back(cod, c);
  return AlgebraHom(std::move(dom), std::move(cod), std::move(images));
}

AlgebraHom hom_compose(const AlgebraHom& f, const AlgebraHom& g) {
  if (!(*f.codomain() == *g.domain()))
    throw MismatchError("hom_compose: chaining mismatch");
  std::vector<WeilElement> images;
  images.reserve(f.var_images().size());
  for (const auto& img : f.var_images()) images.push_back(g.apply(img));
  return AlgebraHom(f.domain(), g.codomain(), std::move(images));
}

WeilElement hom_apply(const AlgebraHom& f, const WeilElement& x) { return f.apply(x); }

}  // namespace weil
