#ifndef WEIL_MONOMIAL_HPP
#define WEIL_MONOMIAL_HPP

#include <functional>
#include <string>
#include <vector>

namespace weil {

/// A monomial as an exponent vector of fixed arity. Ordering is graded
/// lexicographic, which fixes basis enumeration order, matrix layout and
/// canonical printing throughout the engine.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int arity) : e_(arity, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

  static Monomial unit(int arity) { return Monomial(arity); }
  static Monomial var(int arity, int i, int exp = 1);

  int arity() const { return static_cast<int>(e_.size()); }
  int exp(int i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const;
  bool is_unit() const { return degree() == 0; }

  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial pow(int k) const;

  /// Exponents re-homed into a wider/permuted variable space:
  /// old variable i becomes new variable var_map[i].
  Monomial remap(int new_arity, const std::vector<int>& var_map) const;

  /// Negative if *this precedes m in graded lex order.
  static int cmp(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

  /// Render as e.g. "d1*d3^2" with the given variable namer; "1" when unit.
  std::string str(const std::function<std::string(int)>& var_name) const;
  std::string str(const std::string& stem) const;

 private:
  std::vector<int> e_;
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp(a, b) < 0;
  }
};

}  // namespace weil

#endif
