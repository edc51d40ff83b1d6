#ifndef WEIL_POLY_HPP
#define WEIL_POLY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "weil/monomial.hpp"
#include "weil/rational.hpp"

namespace weil {

/// Predicate deciding which monomials survive a reduction step.
using MonomialKeep = std::function<bool(const Monomial&)>;

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed number of variables. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rat, GrlexLess>;

  Poly() : arity_(0) {}
  explicit Poly(int arity) : arity_(arity) {}

  static Poly zero(int arity) { return Poly(arity); }
  static Poly constant(int arity, const Rat& c);
  static Poly variable(int arity, int i);
  static Poly term(const Monomial& m, const Rat& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const Terms& terms() const { return terms_; }
  int degree() const;

  Rat coeff(const Monomial& m) const;
  Rat constant_term() const { return coeff(Monomial::unit(arity_)); }

  Poly& add_term(const Monomial& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Rat& c) const;
  Poly times_monomial(const Monomial& m, const Rat& c) const;

  /// Substitution: variable i is replaced by images[i]. All images share one
  /// arity, which becomes the arity of the result. An optional keep-predicate
  /// prunes monomials as products accumulate, which keeps nilpotent
  /// substitutions from transiting through dead terms.
  Poly compose(const std::vector<Poly>& images,
               const MonomialKeep* keep = nullptr) const;

  /// Variable i of the result is old variable var_map-preimage; terms move
  /// monomial-by-monomial via Monomial::remap.
  Poly remap(int new_arity, const std::vector<int>& var_map) const;

  Poly filtered(const MonomialKeep& keep) const;
  Poly derivative(int var) const;
  Rat eval(const std::vector<Rat>& point) const;

  std::string str(const std::function<std::string(int)>& var_name) const;
  std::string str(const std::string& stem = "d") const;

 private:
  int arity_;
  Terms terms_;
};

}  // namespace weil

#endif
