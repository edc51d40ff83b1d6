#ifndef WEIL_TANGENT_HPP
#define WEIL_TANGENT_HPP

#include <array>
#include <vector>

#include "weil/catalog.hpp"
#include "weil/rng.hpp"

namespace weil {

/// Point of the model space visited by a Weil prolongation: one algebra
/// element per model coordinate.
class WeilPoint {
 public:
  WeilPoint() = default;
  WeilPoint(AlgebraPtr algebra, std::vector<WeilElement> coords);

  static WeilPoint constant(AlgebraPtr algebra, const std::vector<Rat>& x);

  const AlgebraPtr& algebra() const { return algebra_; }
  int model_dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<WeilElement>& coords() const { return coords_; }
  const WeilElement& coord(int i) const { return coords_[i]; }
  std::vector<Rat> augmentation() const;

  bool operator==(const WeilPoint& o) const;
  bool operator!=(const WeilPoint& o) const { return !(*this == o); }

 private:
  AlgebraPtr algebra_;
  std::vector<WeilElement> coords_;
};

/// Polynomial map between model spaces.
class PolyMap {
 public:
  PolyMap() : dom_(0) {}
  PolyMap(int domain_dim, std::vector<Poly> components);

  static PolyMap identity(int k);
  static PolyMap constant(int domain_dim, const std::vector<Rat>& value);
  /// x -> A x for a square coefficient matrix given by rows.
  static PolyMap linear(const std::vector<std::vector<Rat>>& rows);

  int domain_dim() const { return dom_; }
  int codomain_dim() const { return static_cast<int>(comps_.size()); }
  const std::vector<Poly>& components() const { return comps_; }

  std::vector<Rat> eval(const std::vector<Rat>& x) const;

 private:
  int dom_;
  std::vector<Poly> comps_;
};

/// Direction field on the model space.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(PolyMap map);

  static VectorField zero(int k);
  static VectorField constant(const std::vector<Rat>& value);
  static VectorField linear(const std::vector<std::vector<Rat>>& rows);

  int dim() const { return map_.domain_dim(); }
  const PolyMap& map() const { return map_; }
  const Poly& component(int i) const { return map_.components()[i]; }

  VectorField operator+(const VectorField& o) const;
  VectorField operator-() const;
  VectorField scaled(const Rat& c) const;
  bool operator==(const VectorField& o) const;
  bool operator!=(const VectorField& o) const { return !(*this == o); }

  std::string str() const;

 private:
  PolyMap map_;
};

/// Tangent vector at a model point.
struct TangentVector {
  std::vector<Rat> base;
  std::vector<Rat> dir;
  bool operator==(const TangentVector& o) const { return base == o.base && dir == o.dir; }
};

/// Element of M^M (x) W for the polynomial model: a polynomial family of
/// Weil points, one coordinate polynomial per model dimension in the model
/// variables followed by the infinitesimal variables. Coordinates are kept
/// reduced modulo the object's ideal in the infinitesimal block.
class FlowElement {
 public:
  FlowElement() : k_(0) {}
  FlowElement(int model_dim, InfinitesimalObject object, std::vector<Poly> coords);

  static FlowElement identity(int model_dim, InfinitesimalObject object);

  int model_dim() const { return k_; }
  const InfinitesimalObject& object() const { return object_; }
  const std::vector<Poly>& coords() const { return coords_; }

  /// Base part (all infinitesimals zero) as model-variable polynomials.
  std::vector<Poly> base() const;
  bool id_based() const;

  /// Coefficient of one infinitesimal monomial, per coordinate, as
  /// model-variable polynomials.
  std::vector<Poly> d_coefficient(const Monomial& d_mono) const;

  WeilPoint at(const std::vector<Rat>& x) const;

  bool operator==(const FlowElement& o) const;
  bool operator!=(const FlowElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int k_;
  InfinitesimalObject object_;
  std::vector<Poly> coords_;
};

// Prolongation and hom actions -------------------------------------------

WeilPoint prolong_point(const PolyMap& f, const WeilPoint& p);
WeilPoint apply_hom_point(const AlgebraHom& h, const WeilPoint& p);
FlowElement apply_hom_flow(const AlgebraHom& h, const FlowElement& f);
/// Restriction along the inclusion of a subobject on the same variables.
FlowElement restrict_flow(const FlowElement& f, const InfinitesimalObject& sub);
WeilPoint restrict_point(const WeilPoint& p, const InfinitesimalObject& sub);

// Tangent-space structure --------------------------------------------------

/// The four fiber operations, each implemented literally as the action of
/// the hom induced by its defining putative mapping.
TangentVector tangent_add(const TangentVector& a, const TangentVector& b);
TangentVector tangent_zero(const std::vector<Rat>& x);
TangentVector tangent_neg(const TangentVector& t);
TangentVector tangent_scale(const Rat& alpha, const TangentVector& t);

/// x + sum d_i * dir_i over W_{D(n)}; projecting along the i-th injection
/// recovers the i-th input.
WeilPoint ell_combine(const std::vector<TangentVector>& ts);
TangentVector point_to_tangent(const WeilPoint& p);

// Microflows ----------------------------------------------------------------

FlowElement field_to_flow(const VectorField& x);
VectorField flow_to_field(const FlowElement& f);
/// x + d1 X(x) + d2 Y(x) over D(2), the fieldwise joint combination.
FlowElement ell_flow(const VectorField& x, const VectorField& y);

/// second * first in the block-variable sense: first acts on the leading
/// infinitesimal block, second on the trailing one. Both operands must live
/// over full powers.
FlowElement star(const FlowElement& first, const FlowElement& second);
/// Composition over one shared algebra: apply first, then second.
FlowElement compose_flows(const FlowElement& first, const FlowElement& second);

VectorField lie_bracket(const VectorField& x, const VectorField& y);
/// Bracket through the strong-difference route.
VectorField bracket_via_strong_diff(const VectorField& x, const VectorField& y);
/// Classical coordinate formula J_Y X - J_X Y, used as an independent
/// cross-check of the bracket extraction.
VectorField jacobian_commutator(const VectorField& x, const VectorField& y);

// Strong differences ---------------------------------------------------------

/// minuend -. subtrahend for microsquares agreeing away from the cross
/// term; the result is tangent-shaped (over D).
FlowElement strong_diff(const FlowElement& subtrahend, const FlowElement& minuend);
WeilPoint strong_diff(const WeilPoint& subtrahend, const WeilPoint& minuend);

/// Axis difference of microcubes agreeing off the given axis; the result is
/// a microsquare keeping the axis variable first and the fresh direction
/// second.
FlowElement strong_diff_axis(const FlowElement& subtrahend, const FlowElement& minuend,
                             int axis);
WeilPoint strong_diff_axis(const WeilPoint& subtrahend, const WeilPoint& minuend, int axis);

// Jacobi machinery ------------------------------------------------------------

/// Sum of the three cyclic strong differences of a compatible microsquare
/// triple; true iff it vanishes identically.
bool primordial_jacobi_check(const FlowElement& g1, const FlowElement& g2,
                             const FlowElement& g3);

struct GeneralJacobiResult {
  bool zero = false;
  /// When the encoding cross-check runs: the three expressions recomputed
  /// through the sextuple encoding agree with the direct route.
  bool encoding_agrees = true;
  std::array<FlowElement, 3> expressions;
};

/// The three alternating double differences of a compatible microcube
/// sextuple (order: 123, 132, 213, 231, 312, 321); checks that they sum to
/// zero, optionally cross-checking through the sextuple encoding.
GeneralJacobiResult general_jacobi_check(const std::array<FlowElement, 6>& cubes,
                                         bool encoding_cross_check = false);

/// The six permuted triple composites of three fields; feeding them to
/// general_jacobi_check realizes the bracket Jacobi identity.
std::array<FlowElement, 6> jacobi_witness_from_fields(const VectorField& x,
                                                      const VectorField& y,
                                                      const VectorField& z);

/// Decode a sextuple of microcubes from an element over the sextuple
/// encoding algebra; every compatible sextuple arises this way.
std::array<FlowElement, 6> sextuple_from_encoding(const FlowElement& g);

// Randomized inputs for verification batches ---------------------------------

VectorField random_field(Rng& rng, int k, int degree);
/// Arbitrary flow over the object: random coefficient polynomials of
/// bounded degree, with the base left at the identity when id_based is set.
FlowElement random_flow(Rng& rng, int k, const InfinitesimalObject& object, int degree,
                        bool id_based = false);
/// Microsquare triple sharing everything but the cross coefficients.
std::array<FlowElement, 3> random_compatible_squares(Rng& rng, int k, int degree,
                                                     bool id_based = false);
/// Compatible microcube sextuple via a random sextuple-encoding element.
std::array<FlowElement, 6> random_compatible_sextuple(Rng& rng, int k, int degree);

}  // namespace weil

#endif
