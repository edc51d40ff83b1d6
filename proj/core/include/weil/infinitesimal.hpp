#ifndef WEIL_INFINITESIMAL_HPP
#define WEIL_INFINITESIMAL_HPP

#include <string>
#include <vector>

#include "weil/poly.hpp"

namespace weil {

/// Presentation of an infinitesimal object: a variable count, a per-variable
/// nilpotency cap (cap c means the c-th power vanishes; simplicial objects
/// are exactly the all-caps-2 case), and a normalized set of monomial
/// relations generating the rest of the ideal.
class InfinitesimalObject {
 public:
  InfinitesimalObject() : n_(0) {}

  /// General constructor; relations are 1-based strictly increasing index
  /// sequences, each standing for the squarefree product of those variables.
  static InfinitesimalObject make(int n, std::vector<int> caps,
                                  const std::vector<std::vector<int>>& relations);
  /// All caps 2.
  static InfinitesimalObject simplicial(int n,
                                        const std::vector<std::vector<int>>& relations);
  /// Relations given directly as exponent vectors.
  static InfinitesimalObject with_monomial_relations(int n, std::vector<int> caps,
                                                     std::vector<Monomial> relations);

  static InfinitesimalObject terminal() { return InfinitesimalObject(); }
  static InfinitesimalObject line() { return power(1); }           // D
  static InfinitesimalObject power(int n);                         // D^n
  static InfinitesimalObject pairwise(int n);                      // D(n)
  static InfinitesimalObject higher(int order);                    // D_k, cap k+1

  int var_count() const { return n_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::vector<Monomial>& relations() const { return relations_; }

  bool is_terminal() const { return n_ == 0; }
  bool all_caps_two() const;
  bool is_simplicial() const { return all_caps_two(); }
  /// D^n: simplicial with no relations.
  bool is_power() const { return all_caps_two() && relations_.empty(); }

  /// True iff the monomial lies in the nilpotency ideal.
  bool in_ideal(const Monomial& m) const;

  /// Cap powers followed by relations: a generating set of the ideal.
  std::vector<Monomial> ideal_generators() const;

  bool operator==(const InfinitesimalObject& o) const {
    return n_ == o.n_ && caps_ == o.caps_ && relations_ == o.relations_;
  }
  bool operator!=(const InfinitesimalObject& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int n_;
  std::vector<int> caps_;
  std::vector<Monomial> relations_;
  void normalize();
};

/// Concatenation of simplicial objects with every cross product forced to
/// vanish.
InfinitesimalObject oplus(const InfinitesimalObject& a, const InfinitesimalObject& b);

/// Plain concatenation: both relation sets, no cross relations. This is the
/// object underlying the tensor product of the two algebras.
InfinitesimalObject product_object(const InfinitesimalObject& a,
                                   const InfinitesimalObject& b);

/// A putative mapping between infinitesimal objects: one polynomial with
/// zero constant term per target variable, in the source variables. The
/// constructor proves well-definedness by reducing every target ideal
/// generator and refuses the map otherwise.
class InfinitesimalMap {
 public:
  InfinitesimalMap() = default;

  static InfinitesimalMap make(InfinitesimalObject source, InfinitesimalObject target,
                               std::vector<Poly> components);
  static InfinitesimalMap identity(const InfinitesimalObject& obj);
  /// Components read off an index list: entry j > 0 means d_j, entry -j
  /// means -d_j, entry 0 means the zero polynomial. Covers injections,
  /// projections, permutations and sign flips.
  static InfinitesimalMap coordinates(InfinitesimalObject source, InfinitesimalObject target,
                                      const std::vector<int>& index);
  /// Inclusion of a finer object (larger ideal) into a coarser one on the
  /// same variables.
  static InfinitesimalMap inclusion(const InfinitesimalObject& sub,
                                    const InfinitesimalObject& whole);
  /// Projection of a block product onto the block [offset, offset+target.n).
  static InfinitesimalMap block_projection(const InfinitesimalObject& source,
                                           const InfinitesimalObject& target, int offset);
  /// Embedding of the i-th operand into an oplus of simplicial objects.
  static InfinitesimalMap block_embedding(const std::vector<InfinitesimalObject>& operands,
                                          int which);

  const InfinitesimalObject& source() const { return source_; }
  const InfinitesimalObject& target() const { return target_; }
  const std::vector<Poly>& components() const { return components_; }

  bool operator==(const InfinitesimalMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && components_ == o.components_;
  }

  std::string str() const;

 private:
  InfinitesimalObject source_, target_;
  std::vector<Poly> components_;
};

/// g after f, with components reduced modulo the ideal of f's source.
InfinitesimalMap compose_maps(const InfinitesimalMap& f, const InfinitesimalMap& g);

/// The unique map from the oplus of the operands' sources restricting to
/// each operand on its block.
InfinitesimalMap combine_maps(const std::vector<InfinitesimalMap>& maps);

}  // namespace weil

#endif
