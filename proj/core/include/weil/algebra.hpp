#ifndef WEIL_ALGEBRA_HPP
#define WEIL_ALGEBRA_HPP

#include <map>
#include <memory>
#include <vector>

#include "weil/infinitesimal.hpp"

namespace weil {

/// Truncated polynomial ring with an explicit monomial basis: all monomials
/// below the caps that avoid every relation, graded-lexicographically
/// sorted. The basis is a staircase (closed under division) and always
/// contains the constant monomial.
class WeilAlgebra {
 public:
  explicit WeilAlgebra(InfinitesimalObject obj);

  const InfinitesimalObject& object() const { return object_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// -1 when the monomial lies in the ideal.
  int index_of(const Monomial& m) const;
  bool contains(const Monomial& m) const { return index_of(m) >= 0; }

  bool operator==(const WeilAlgebra& o) const { return object_ == o.object_; }

 private:
  InfinitesimalObject object_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int, GrlexLess> index_;
};

using AlgebraPtr = std::shared_ptr<const WeilAlgebra>;

AlgebraPtr algebra_of(const InfinitesimalObject& obj);
AlgebraPtr product_algebra(const WeilAlgebra& a, const WeilAlgebra& b);

/// Element of a Weil algebra: a sparse rational coefficient table over the
/// basis monomials.
class WeilElement {
 public:
  WeilElement() = default;
  WeilElement(AlgebraPtr algebra, Poly value);  // reduces modulo the ideal

  static WeilElement zero(AlgebraPtr a);
  static WeilElement one(AlgebraPtr a);
  static WeilElement constant(AlgebraPtr a, const Rat& c);
  static WeilElement variable(AlgebraPtr a, int i);
  static WeilElement from_coords(AlgebraPtr a, const std::vector<Rat>& coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Poly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  Rat coeff(const Monomial& m) const { return value_.coeff(m); }
  Rat augmentation() const { return value_.constant_term(); }
  /// Dense coordinates in basis order.
  std::vector<Rat> coords() const;

  WeilElement operator+(const WeilElement& o) const;
  WeilElement operator-(const WeilElement& o) const;
  WeilElement operator*(const WeilElement& o) const;
  WeilElement scaled(const Rat& c) const;
  bool operator==(const WeilElement& o) const;
  bool operator!=(const WeilElement& o) const { return !(*this == o); }

  std::string str() const { return value_.str("d"); }

 private:
  AlgebraPtr algebra_;
  Poly value_;
  void check_same(const WeilElement& o) const;
};

WeilElement elem_linear(const WeilElement& a, const WeilElement& b, const Rat& alpha,
                        const Rat& beta);
WeilElement elem_mul(const WeilElement& a, const WeilElement& b);

}  // namespace weil

#endif
