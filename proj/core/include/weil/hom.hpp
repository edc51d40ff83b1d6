#ifndef WEIL_HOM_HPP
#define WEIL_HOM_HPP

#include "weil/algebra.hpp"
#include "weil/linalg.hpp"

namespace weil {

/// Algebra homomorphism between Weil algebras, determined by the images of
/// the domain variables (each with zero constant term, so the augmentation
/// ideal is preserved). The linear action on the monomial basis is cached
/// as a matrix: column j holds the image of the j-th domain basis monomial.
class AlgebraHom {
 public:
  AlgebraHom() = default;
  AlgebraHom(AlgebraPtr domain, AlgebraPtr codomain, std::vector<WeilElement> var_images);

  static AlgebraHom identity(AlgebraPtr a);

  const AlgebraPtr& domain() const { return domain_; }
  const AlgebraPtr& codomain() const { return codomain_; }
  const std::vector<WeilElement>& var_images() const { return var_images_; }
  const Mat& matrix() const { return matrix_; }

  WeilElement apply(const WeilElement& x) const;

  /// Multiplicativity on all basis pairs plus unitality; quadratic in the
  /// dimension, intended for verification rather than hot paths.
  bool is_multiplicative() const;

  bool operator==(const AlgebraHom& o) const;

 private:
  AlgebraPtr domain_, codomain_;
  std::vector<WeilElement> var_images_;
  Mat matrix_;
};

/// Contravariantly induced homomorphism: a putative mapping phi : A -> B of
/// objects yields W_phi : W_B -> W_A, sending the j-th variable of W_B to
/// the j-th component polynomial of phi reduced in W_A.
AlgebraHom induced_hom(const InfinitesimalMap& phi);

/// g after f; requires f's codomain to be g's domain.
AlgebraHom hom_compose(const AlgebraHom& f, const AlgebraHom& g);

WeilElement hom_apply(const AlgebraHom& f, const WeilElement& x);

}  // namespace weil

#endif
