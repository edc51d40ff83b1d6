#include "weil/tangent.hpp"

#include <map>

#include "weil/errors.hpp"

namespace weil {

namespace {

using Obj = InfinitesimalObject;
using Map = InfinitesimalMap;

Monomial model_part(const Monomial& m, int k) {
  std::vector<int> e(k);
  for (int i = 0; i < k; ++i) e[i] = m.exp(i);
  return Monomial(std::move(e));
}

Monomial infinitesimal_part(const Monomial& m, int k) {
  std::vector<int> e(m.arity() - k);
  for (int i = k; i < m.arity(); ++i) e[i - k] = m.exp(i);
  return Monomial(std::move(e));
}

Monomial joined(const Monomial& xm, const Monomial& dm) {
  std::vector<int> e = xm.exponents();
  e.insert(e.end(), dm.exponents().begin(), dm.exponents().end());
  return Monomial(std::move(e));
}

MonomialKeep flow_keep(int k, const Obj& obj) {
  return [k, obj](const Monomial& m) { return !obj.in_ideal(infinitesimal_part(m, k)); };
}

std::function<std::string(int)> flow_namer(int k) {
  return [k](int i) {
    return i < k ? "x" + std::to_string(i + 1) : "d" + std::to_string(i - k + 1);
  };
}

}  // namespace

// WeilPoint -------------------------------------------------------------

WeilPoint::WeilPoint(AlgebraPtr algebra, std::vector<WeilElement> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (!(*c.algebra() == *algebra_))
      throw MismatchError("point coordinate lies in the wrong algebra");
}

WeilPoint WeilPoint::constant(AlgebraPtr algebra, const std::vector<Rat>& x) {
  std::vector<WeilElement> coords;
  coords.reserve(x.size());
  for (const Rat& c : x) coords.push_back(WeilElement::constant(algebra, c));
  return WeilPoint(algebra, std::move(coords));
}

std::vector<Rat> WeilPoint::augmentation() const {
  std::vector<Rat> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.augmentation());
  return out;
}

bool WeilPoint::operator==(const WeilPoint& o) const {
  if (!(*algebra_ == *o.algebra_) || coords_.size() != o.coords_.size()) return false;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (!(coords_[i] == o.coords_[i])) return false;
  return true;
}

// PolyMap / VectorField --------------------------------------------------

PolyMap::PolyMap(int domain_dim, std::vector<Poly> components)
    : dom_(domain_dim), comps_(std::move(components)) {
  for (const auto& c : comps_)
    if (c.arity() != dom_) throw MismatchError("component arity mismatch");
}

PolyMap PolyMap::identity(int k) {
  std::vector<Poly> comps;
  for (int i = 0; i < k; ++i) comps.push_back(Poly::variable(k, i));
  return PolyMap(k, std::move(comps));
}

PolyMap PolyMap::constant(int domain_dim, const std::vector<Rat>& value) {
  std::vector<Poly> comps;
  comps.reserve(value.size());
  for (const Rat& c : value) comps.push_back(Poly::constant(domain_dim, c));
  return PolyMap(domain_dim, std::move(comps));
}

PolyMap PolyMap::linear(const std::vector<std::vector<Rat>>& rows) {
  const int k = static_cast<int>(rows.size());
  std::vector<Poly> comps;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != k) throw MismatchError("linear map must be square");
    Poly p(k);
    for (int j = 0; j < k; ++j) p = p + Poly::variable(k, j).scaled(row[j]);
    comps.push_back(p);
  }
  return PolyMap(k, std::move(comps));
}

std::vector<Rat> PolyMap::eval(const std::vector<Rat>& x) const {
  std::vector<Rat> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.eval(x));
  return out;
}

VectorField::VectorField(PolyMap map) : map_(std::move(map)) {
  if (map_.codomain_dim() != map_.domain_dim())
    throw MismatchError("vector field must map k to k");
}

VectorField VectorField::zero(int k) {
  return VectorField(PolyMap(k, std::vector<Poly>(k, Poly::zero(k))));
}

VectorField VectorField::constant(const std::vector<Rat>& value) {
  return VectorField(PolyMap::constant(static_cast<int>(value.size()), value));
}

VectorField VectorField::linear(const std::vector<std::vector<Rat>>& rows) {
  return VectorField(PolyMap::linear(rows));
}

VectorField VectorField::operator+(const VectorField& o) const {
  std::vector<Poly> comps;
  for (int i = 0; i < dim(); ++i) comps.push_back(component(i) + o.component(i));
  return VectorField(PolyMap(dim(), std::move(comps)));
}

VectorField VectorField::operator-() const {
  std::vector<Poly> comps;
  for (int i = 0; i < dim(); ++i) comps.push_back(-component(i));
  return VectorField(PolyMap(dim(), std::move(comps)));
}

VectorField VectorField::scaled(const Rat& c) const {
  std::vector<Poly> comps;
  for (int i = 0; i < dim(); ++i) comps.push_back(component(i).scaled(c));
  return VectorField(PolyMap(dim(), std::move(comps)));
}

bool VectorField::operator==(const VectorField& o) const {
  return dim() == o.dim() && map_.components() == o.map_.components();
}

std::string VectorField::str() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) out += (i ? ", " : "") + component(i).str("x");
  return out;
}

// FlowElement -------------------------------------------------------------

FlowElement::FlowElement(int model_dim, InfinitesimalObject object, std::vector<Poly> coords)
    : k_(model_dim), object_(std::move(object)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != k_)
    throw MismatchError("flow needs one coordinate per model dimension");
  auto keep = flow_keep(k_, object_);
  for (auto& c : coords_) {
    if (c.arity() != k_ + object_.var_count())
      throw MismatchError("flow coordinate arity mismatch");
    c = c.filtered(keep);
  }
}

FlowElement FlowElement::identity(int model_dim, InfinitesimalObject object) {
  std::vector<Poly> coords;
  const int arity = model_dim + object.var_count();
  for (int i = 0; i < model_dim; ++i) coords.push_back(Poly::variable(arity, i));
  return FlowElement(model_dim, std::move(object), std::move(coords));
}

std::vector<Poly> FlowElement::base() const {
  return d_coefficient(Monomial::unit(object_.var_count()));
}

bool FlowElement::id_based() const {
  auto b = base();
  for (int i = 0; i < k_; ++i)
    if (b[i] != Poly::variable(k_, i)) return false;
  return true;
}

std::vector<Poly> FlowElement::d_coefficient(const Monomial& d_mono) const {
  std::vector<Poly> out;
  out.reserve(k_);
  for (const auto& c : coords_) {
    Poly p(k_);
    for (const auto& [m, coeff] : c.terms())
      if (infinitesimal_part(m, k_) == d_mono) p.add_term(model_part(m, k_), coeff);
    out.push_back(std::move(p));
  }
  return out;
}

WeilPoint FlowElement::at(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != k_) throw MismatchError("point dimension mismatch");
  AlgebraPtr alg = algebra_of(object_);
  std::vector<WeilElement> coords;
  for (const auto& c : coords_) {
    Poly p(object_.var_count());
    for (const auto& [m, coeff] : c.terms()) {
      Rat factor = coeff;
      for (int i = 0; i < k_; ++i)
        for (int e = 0; e < m.exp(i); ++e) factor *= x[i];
      if (factor != 0) p.add_term(infinitesimal_part(m, k_), factor);
    }
    coords.emplace_back(alg, std::move(p));
  }
  return WeilPoint(alg, std::move(coords));
}

bool FlowElement::operator==(const FlowElement& o) const {
  return k_ == o.k_ && object_ == o.object_ && coords_ == o.coords_;
}

std::string FlowElement::str() const {
  std::string out;
  for (int i = 0; i < k_; ++i) out += (i ? "; " : "") + coords_[i].str(flow_namer(k_));
  return out;
}

// Prolongation and hom actions --------------------------------------------

WeilPoint prolong_point(const PolyMap& f, const WeilPoint& p) {
  if (f.domain_dim() != p.model_dim())
    throw MismatchError("prolong_point: arity mismatch");
  const Obj& obj = p.algebra()->object();
  MonomialKeep keep = [&obj](const Monomial& m) { return !obj.in_ideal(m); };
  std::vector<Poly> images;
  images.reserve(p.model_dim());
  for (const auto& c : p.coords()) images.push_back(c.value());
  std::vector<WeilElement> out;
  for (const auto& comp : f.components())
    out.emplace_back(p.algebra(), comp.compose(images, &keep));
  return WeilPoint(p.algebra(), std::move(out));
}

WeilPoint apply_hom_point(const AlgebraHom& h, const WeilPoint& p) {
  std::vector<WeilElement> out;
  out.reserve(p.model_dim());
  for (const auto& c : p.coords()) out.push_back(h.apply(c));
  return WeilPoint(h.codomain(), std::move(out));
}

FlowElement apply_hom_flow(const AlgebraHom& h, const FlowElement& f) {
  if (!(h.domain()->object() == f.object()))
    throw MismatchError("apply_hom_flow: flow lives over the wrong object");
  const int k = f.model_dim();
  const Obj& target = h.codomain()->object();
  const int arity = k + target.var_count();
  std::vector<Poly> coords;
  coords.reserve(k);
  for (const auto& c : f.coords()) {
    Poly out(arity);
    for (const auto& [m, coeff] : c.terms()) {
      Monomial xm = model_part(m, k);
      int col = h.domain()->index_of(infinitesimal_part(m, k));
      for (int row = 0; row < h.codomain()->dim(); ++row) {
        const Rat& entry = h.matrix().at(row, col);
        if (entry != 0)
          out.add_term(joined(xm, h.codomain()->basis()[row]), coeff * entry);
      }
    }
    coords.push_back(std::move(out));
  }
  return FlowElement(k, target, std::move(coords));
}

FlowElement restrict_flow(const FlowElement& f, const InfinitesimalObject& sub) {
  return apply_hom_flow(induced_hom(Map::inclusion(sub, f.object())), f);
}

WeilPoint restrict_point(const WeilPoint& p, const InfinitesimalObject& sub) {
  return apply_hom_point(induced_hom(Map::inclusion(sub, p.algebra()->object())), p);
}

// Tangent-space structure ----------------------------------------------------

namespace {

const AlgebraHom& addition_hom() {
  // Induced by d |-> (d,d); collapses the two tangent slots onto one.
  static const AlgebraHom h = induced_hom(
      Map::make(Obj::line(), Obj::pairwise(2), {Poly::variable(1, 0), Poly::variable(1, 0)}));
  return h;
}

const AlgebraHom& zero_hom() {
  // Induced by the unique map D -> 1.
  static const AlgebraHom h = induced_hom(Map::make(Obj::line(), Obj::terminal(), {}));
  return h;
}

const AlgebraHom& negation_hom() {
  static const AlgebraHom h =
      induced_hom(Map::coordinates(Obj::line(), Obj::line(), {-1}));
  return h;
}

AlgebraHom scaling_hom(const Rat& alpha) {
  return induced_hom(Map::make(Obj::line(), Obj::line(),
                               {Poly::variable(1, 0).scaled(alpha)}));
}

}  // namespace

WeilPoint ell_combine(const std::vector<TangentVector>& ts) {
  if (ts.empty()) throw MismatchError("ell_combine: no tangents");
  const int n = static_cast<int>(ts.size());
  const int k = static_cast<int>(ts.front().base.size());
  for (const auto& t : ts)
    if (t.base != ts.front().base) throw BaseMismatch("tangents have different base points");
  AlgebraPtr alg = algebra_of(Obj::pairwise(n));
  std::vector<WeilElement> coords;
  for (int i = 0; i < k; ++i) {
    Poly p(n);
    p.add_term(Monomial::unit(n), ts.front().base[i]);
    for (int j = 0; j < n; ++j) p.add_term(Monomial::var(n, j), ts[j].dir[i]);
    coords.emplace_back(alg, std::move(p));
  }
  return WeilPoint(alg, std::move(coords));
}

TangentVector point_to_tangent(const WeilPoint& p) {
  if (!(p.algebra()->object() == Obj::line()))
    throw MismatchError("point is not tangent-shaped");
  TangentVector t;
  t.base = p.augmentation();
  for (const auto& c : p.coords()) t.dir.push_back(c.coeff(Monomial::var(1, 0)));
  return t;
}

TangentVector tangent_add(const TangentVector& a, const TangentVector& b) {
  if (a.base != b.base) throw BaseMismatch("tangent_add: base points differ");
  return point_to_tangent(apply_hom_point(addition_hom(), ell_combine({a, b})));
}

TangentVector tangent_zero(const std::vector<Rat>& x) {
  WeilPoint p = WeilPoint::constant(algebra_of(Obj::terminal()), x);
  return point_to_tangent(apply_hom_point(zero_hom(), p));
}

TangentVector tangent_neg(const TangentVector& t) {
  return point_to_tangent(apply_hom_point(negation_hom(), ell_combine({t})));
}

TangentVector tangent_scale(const Rat& alpha, const TangentVector& t) {
  return point_to_tangent(apply_hom_point(scaling_hom(alpha), ell_combine({t})));
}

// Microflows -------------------------------------------------------------------

FlowElement field_to_flow(const VectorField& x) {
  const int k = x.dim();
  const int arity = k + 1;
  std::vector<int> widen(k);
  for (int i = 0; i < k; ++i) widen[i] = i;
  std::vector<Poly> coords;
  for (int i = 0; i < k; ++i) {
    Poly p = Poly::variable(arity, i) +
             x.component(i).remap(arity, widen) * Poly::variable(arity, k);
    coords.push_back(std::move(p));
  }
  return FlowElement(k, Obj::line(), std::move(coords));
}

VectorField flow_to_field(const FlowElement& f) {
  if (!(f.object() == Obj::line()))
    throw MismatchError("flow_to_field: flow is not over a single direction");
  return VectorField(PolyMap(f.model_dim(), f.d_coefficient(Monomial::var(1, 0))));
}

FlowElement ell_flow(const VectorField& x, const VectorField& y) {
  if (x.dim() != y.dim()) throw MismatchError("ell_flow: dimension mismatch");
  const int k = x.dim();
  const int arity = k + 2;
  std::vector<int> widen(k);
  for (int i = 0; i < k; ++i) widen[i] = i;
  std::vector<Poly> coords;
  for (int i = 0; i < k; ++i) {
    Poly p = Poly::variable(arity, i) +
             x.component(i).remap(arity, widen) * Poly::variable(arity, k) +
             y.component(i).remap(arity, widen) * Poly::variable(arity, k + 1);
    coords.push_back(std::move(p));
  }
  return FlowElement(k, Obj::pairwise(2), std::move(coords));
}

FlowElement compose_flows(const FlowElement& first, const FlowElement& second) {
  if (!(first.object() == second.object()))
    throw MismatchError("compose_flows: objects differ");
  if (first.model_dim() != second.model_dim())
    throw MismatchError("compose_flows: model dimensions differ");
  const int k = first.model_dim();
  const int n = first.object().var_count();
  std::vector<Poly> images = first.coords();
  for (int j = 0; j < n; ++j) images.push_back(Poly::variable(k + n, k + j));
  auto keep = flow_keep(k, first.object());
  std::vector<Poly> coords;
  coords.reserve(k);
  for (const auto& c : second.coords()) coords.push_back(c.compose(images, &keep));
  return FlowElement(k, first.object(), std::move(coords));
}

FlowElement star(const FlowElement& first, const FlowElement& second) {
  if (!first.object().is_power() || !second.object().is_power())
    throw NonPowerObject("star is defined over full powers only");
  if (first.model_dim() != second.model_dim())
    throw MismatchError("star: model dimensions differ");
  const int k = first.model_dim();
  const int m = first.object().var_count();
  const int n = second.object().var_count();
  const Obj total = Obj::power(m + n);
  std::vector<int> map1(k + m), map2(k + n);
  for (int i = 0; i < k; ++i) map1[i] = map2[i] = i;
  for (int j = 0; j < m; ++j) map1[k + j] = k + j;
  for (int j = 0; j < n; ++j) map2[k + j] = k + m + j;
  std::vector<Poly> c1, c2;
  for (const auto& c : first.coords()) c1.push_back(c.remap(k + m + n, map1));
  for (const auto& c : second.coords()) c2.push_back(c.remap(k + m + n, map2));
  return compose_flows(FlowElement(k, total, std::move(c1)),
                       FlowElement(k, total, std::move(c2)));
}

// Strong differences -----------------------------------------------------------

namespace {

struct CospanBundle {
  LimitKit kit;
  AlgebraHom restrict_first;  // arrow A -> C, reused to seed the shared node
  AlgebraHom extract;
  Obj operand_object;
  Obj apex_object;
  Obj result_object;
};

CospanBundle make_bundle(catalog::NamedCone nc, const Map& extract_map,
                         Obj operand, Obj result) {
  AlgebraHom ra = nc.diagram.arrows().front().hom;
  Obj apex = nc.cone.apex->object();
  return CospanBundle{LimitKit(std::move(nc.diagram), std::move(nc.cone)),
                      std::move(ra),
                      induced_hom(extract_map),
                      std::move(operand),
                      std::move(apex),
                      std::move(result)};
}

const CospanBundle& square_pair_bundle() {
  static const CospanBundle b = make_bundle(catalog::cone_microsquare_pair(),
                                            catalog::pair_extract(), Obj::power(2),
                                            Obj::line());
  return b;
}

const CospanBundle& axis_bundle(int axis) {
  static const CospanBundle b1 = make_bundle(catalog::cone_axis_pair(1),
                                             catalog::axis_extract(1), Obj::power(3),
                                             Obj::power(2));
  static const CospanBundle b2 = make_bundle(catalog::cone_axis_pair(2),
                                             catalog::axis_extract(2), Obj::power(3),
                                             Obj::power(2));
  static const CospanBundle b3 = make_bundle(catalog::cone_axis_pair(3),
                                             catalog::axis_extract(3), Obj::power(3),
                                             Obj::power(2));
  switch (axis) {
    case 1: return b1;
    case 2: return b2;
    case 3: return b3;
    default: throw MismatchError("axis must be 1, 2 or 3");
  }
}

using Slices = std::map<Monomial, std::vector<WeilElement>, GrlexLess>;

Slices decompose_flow(const FlowElement& f, const AlgebraPtr& alg) {
  const int k = f.model_dim();
  Slices slices;
  for (int i = 0; i < k; ++i) {
    for (const auto& [m, c] : f.coords()[i].terms()) {
      Monomial xm = model_part(m, k);
      auto it = slices.find(xm);
      if (it == slices.end())
        it = slices.emplace(xm, std::vector<WeilElement>(k, WeilElement::zero(alg))).first;
      it->second[i] =
          it->second[i] + WeilElement(alg, Poly::term(infinitesimal_part(m, k), c));
    }
  }
  return slices;
}

/// Lift a node-indexed family of flows through a verified cone, slicewise
/// over the model monomials.
FlowElement lift_flows(const LimitKit& kit, const std::vector<FlowElement>& family,
                       int model_dim) {
  const auto& d = kit.diagram();
  std::vector<Slices> slices;
  slices.reserve(family.size());
  for (int v = 0; v < d.node_count(); ++v) {
    if (!(family[v].object() == d.node(v)->object()))
      throw MismatchError("family flow over wrong object at node " + d.node_name(v));
    slices.push_back(decompose_flow(family[v], d.node(v)));
  }
  // Union of model monomials across the family.
  std::map<Monomial, bool, GrlexLess> keys;
  for (const auto& s : slices)
    for (const auto& [xm, unused] : s) keys.emplace(xm, true);
  const Obj& apex_obj = kit.cone().apex->object();
  const int arity = model_dim + apex_obj.var_count();
  std::vector<Poly> coords(model_dim, Poly::zero(arity));
  for (const auto& [xm, unused] : keys) {
    std::vector<std::vector<WeilElement>> fam;
    fam.reserve(d.node_count());
    for (int v = 0; v < d.node_count(); ++v) {
      auto it = slices[v].find(xm);
      fam.push_back(it != slices[v].end()
                        ? it->second
                        : std::vector<WeilElement>(model_dim, WeilElement::zero(d.node(v))));
    }
    std::vector<WeilElement> apex = kit.lift(fam);
    for (int i = 0; i < model_dim; ++i)
      for (const auto& [dm, c] : apex[i].value().terms())
        coords[i].add_term(joined(xm, dm), c);
  }
  return FlowElement(model_dim, apex_obj, std::move(coords));
}

FlowElement encode_pair(const CospanBundle& b, const FlowElement& subtrahend,
                        const FlowElement& minuend) {
  if (!(subtrahend.object() == b.operand_object) || !(minuend.object() == b.operand_object))
    throw MismatchError("strong difference operands live over the wrong object");
  if (subtrahend.model_dim() != minuend.model_dim())
    throw MismatchError("strong difference operands have different model dimensions");
  FlowElement shared = apply_hom_flow(b.restrict_first, subtrahend);
  return lift_flows(b.kit, {subtrahend, minuend, shared}, subtrahend.model_dim());
}

FlowElement wrap_point(const WeilPoint& p) {
  const int k = p.model_dim();
  const Obj& obj = p.algebra()->object();
  const int n = obj.var_count();
  std::vector<int> dshift(n);
  for (int j = 0; j < n; ++j) dshift[j] = k + j;
  std::vector<Poly> coords;
  for (const auto& c : p.coords()) coords.push_back(c.value().remap(k + n, dshift));
  return FlowElement(k, obj, std::move(coords));
}

WeilPoint unwrap_point(const FlowElement& f) {
  return f.at(std::vector<Rat>(f.model_dim(), Rat(0)));
}

}  // namespace

FlowElement strong_diff(const FlowElement& subtrahend, const FlowElement& minuend) {
  const CospanBundle& b = square_pair_bundle();
  return apply_hom_flow(b.extract, encode_pair(b, subtrahend, minuend));
}

WeilPoint strong_diff(const WeilPoint& subtrahend, const WeilPoint& minuend) {
  return unwrap_point(strong_diff(wrap_point(subtrahend), wrap_point(minuend)));
}

FlowElement strong_diff_axis(const FlowElement& subtrahend, const FlowElement& minuend,
                             int axis) {
  const CospanBundle& b = axis_bundle(axis);
  return apply_hom_flow(b.extract, encode_pair(b, subtrahend, minuend));
}

WeilPoint strong_diff_axis(const WeilPoint& subtrahend, const WeilPoint& minuend,
                           int axis) {
  return unwrap_point(strong_diff_axis(wrap_point(subtrahend), wrap_point(minuend), axis));
}

// Brackets ----------------------------------------------------------------------

namespace {

const AlgebraHom& commutator_contraction_hom() {
  // Induced by (d1,d2) |-> (d1,d2,-d1,-d2).
  static const AlgebraHom h =
      induced_hom(Map::coordinates(Obj::power(2), Obj::power(4), {1, 2, -1, -2}));
  return h;
}

const AlgebraHom& square_swap_hom() {
  static const AlgebraHom h =
      induced_hom(Map::coordinates(Obj::power(2), Obj::power(2), {2, 1}));
  return h;
}

VectorField extract_cross_field(const FlowElement& f, const std::string& who) {
  const int k = f.model_dim();
  std::vector<Poly> d1 = f.d_coefficient(Monomial::var(2, 0));
  std::vector<Poly> d2 = f.d_coefficient(Monomial::var(2, 1));
  for (int i = 0; i < k; ++i)
    if (!d1[i].is_zero() || !d2[i].is_zero())
      throw FactorizationFailure(who + ": linear infinitesimal part did not vanish");
  if (!f.id_based())
    throw FactorizationFailure(who + ": base is not the identity");
  return VectorField(
      PolyMap(k, f.d_coefficient(Monomial::var(2, 0).times(Monomial::var(2, 1)))));
}

}  // namespace

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  FlowElement fx = field_to_flow(x);
  FlowElement fy = field_to_flow(y);
  FlowElement loop = star(star(star(fx, fy), fx), fy);  // Y * X * Y * X
  FlowElement contracted = apply_hom_flow(commutator_contraction_hom(), loop);
  return extract_cross_field(contracted, "lie_bracket");
}

VectorField bracket_via_strong_diff(const VectorField& x, const VectorField& y) {
  FlowElement yx = star(field_to_flow(x), field_to_flow(y));
  FlowElement xy_swapped =
      apply_hom_flow(square_swap_hom(), star(field_to_flow(y), field_to_flow(x)));
  return flow_to_field(strong_diff(xy_swapped, yx));
}

VectorField jacobian_commutator(const VectorField& x, const VectorField& y) {
  const int k = x.dim();
  std::vector<Poly> comps;
  for (int i = 0; i < k; ++i) {
    Poly p(k);
    for (int j = 0; j < k; ++j) {
      p = p + y.component(i).derivative(j) * x.component(j);
      p = p - x.component(i).derivative(j) * y.component(j);
    }
    comps.push_back(std::move(p));
  }
  return VectorField(PolyMap(k, std::move(comps)));
}

// Jacobi machinery ----------------------------------------------------------------

namespace {

bool tangent_flows_sum_to_zero(const std::vector<FlowElement>& ts) {
  const int k = ts.front().model_dim();
  for (const auto& t : ts) {
    if (!(t.object() == Obj::line())) return false;
    if (t.base() != ts.front().base()) return false;
  }
  for (int i = 0; i < k; ++i) {
    Poly total(k);
    for (const auto& t : ts) total = total + t.d_coefficient(Monomial::var(1, 0))[i];
    if (!total.is_zero()) return false;
  }
  return true;
}

struct SextupleBundle {
  LimitKit quad_kits[3];
  AlgebraHom quad_first_restrict[3];
  LimitKit big_kit;
  AlgebraHom edge_homs[3];       // E1->B12, E2->B23, E3->B31
  AlgebraHom extracts[3];        // the three expression extractions from G
  AlgebraHom quad_extracts[3];   // expression extraction from each E[i]
};

const SextupleBundle& sextuple_bundle() {
  static const SextupleBundle b = [] {
    auto q1 = catalog::cone_quad_encoding(1);
    auto q2 = catalog::cone_quad_encoding(2);
    auto q3 = catalog::cone_quad_encoding(3);
    auto big = catalog::cone_sextuple_encoding();
    return SextupleBundle{
        {LimitKit(q1.diagram, q1.cone), LimitKit(q2.diagram, q2.cone),
         LimitKit(q3.diagram, q3.cone)},
        {q1.diagram.arrows().front().hom, q2.diagram.arrows().front().hom,
         q3.diagram.arrows().front().hom},
        LimitKit(big.diagram, big.cone),
        {induced_hom(catalog::sextuple_h(1, 12)), induced_hom(catalog::sextuple_h(2, 23)),
         induced_hom(catalog::sextuple_h(3, 31))},
        {induced_hom(catalog::sextuple_extract(1)), induced_hom(catalog::sextuple_extract(2)),
         induced_hom(catalog::sextuple_extract(3))},
        {induced_hom(catalog::quad_extract(1)), induced_hom(catalog::quad_extract(2)),
         induced_hom(catalog::quad_extract(3))},
    };
  }();
  return b;
}

FlowElement encode_quad(const SextupleBundle& b, int axis, const FlowElement& g_first,
                        const FlowElement& g_second) {
  FlowElement shared = apply_hom_flow(b.quad_first_restrict[axis - 1], g_first);
  return lift_flows(b.quad_kits[axis - 1], {g_first, g_second, shared},
                    g_first.model_dim());
}

}  // namespace

bool primordial_jacobi_check(const FlowElement& g1, const FlowElement& g2,
                             const FlowElement& g3) {
  FlowElement t1 = strong_diff(g1, g2);
  FlowElement t2 = strong_diff(g2, g3);
  FlowElement t3 = strong_diff(g3, g1);
  return tangent_flows_sum_to_zero({t1, t2, t3});
}

GeneralJacobiResult general_jacobi_check(const std::array<FlowElement, 6>& cubes,
                                         bool encoding_cross_check) {
  const auto& [c123, c132, c213, c231, c312, c321] = cubes;
  GeneralJacobiResult r;
  r.expressions[0] =
      strong_diff(strong_diff_axis(c321, c231, 1), strong_diff_axis(c132, c123, 1));
  r.expressions[1] =
      strong_diff(strong_diff_axis(c132, c312, 2), strong_diff_axis(c213, c231, 2));
  r.expressions[2] =
      strong_diff(strong_diff_axis(c213, c123, 3), strong_diff_axis(c321, c312, 3));
  r.zero = tangent_flows_sum_to_zero(
      {r.expressions[0], r.expressions[1], r.expressions[2]});
  if (encoding_cross_check) {
    const SextupleBundle& b = sextuple_bundle();
    const int k = c123.model_dim();
    FlowElement h1 = encode_quad(b, 1, encode_pair(axis_bundle(1), c321, c231),
                                 encode_pair(axis_bundle(1), c132, c123));
    FlowElement h2 = encode_quad(b, 2, encode_pair(axis_bundle(2), c132, c312),
                                 encode_pair(axis_bundle(2), c213, c231));
    FlowElement h3 = encode_quad(b, 3, encode_pair(axis_bundle(3), c213, c123),
                                 encode_pair(axis_bundle(3), c321, c312));
    FlowElement m = lift_flows(
        b.big_kit,
        {h1, h2, h3, apply_hom_flow(b.edge_homs[0], h1),
         apply_hom_flow(b.edge_homs[1], h2), apply_hom_flow(b.edge_homs[2], h3)},
        k);
    r.encoding_agrees = true;
    const FlowElement quads[3] = {h1, h2, h3};
    for (int i = 0; i < 3; ++i) {
      if (!(apply_hom_flow(b.quad_extracts[i], quads[i]) == r.expressions[i]))
        r.encoding_agrees = false;
      if (!(apply_hom_flow(b.extracts[i], m) == r.expressions[i]))
        r.encoding_agrees = false;
    }
  }
  return r;
}

std::array<FlowElement, 6> jacobi_witness_from_fields(const VectorField& x,
                                                      const VectorField& y,
                                                      const VectorField& z) {
  FlowElement fx = field_to_flow(x), fy = field_to_flow(y), fz = field_to_flow(z);
  auto perm = [](const FlowElement& f, std::vector<int> idx) {
    return apply_hom_flow(
        induced_hom(Map::coordinates(Obj::power(3), Obj::power(3), idx)), f);
  };
  std::array<FlowElement, 6> cubes = {
      star(star(fx, fy), fz),                    // 123: apply X, Y, Z in order
      perm(star(star(fx, fz), fy), {1, 3, 2}),   // 132
      perm(star(star(fy, fx), fz), {2, 1, 3}),   // 213
      perm(star(star(fy, fz), fx), {2, 3, 1}),   // 231
      perm(star(star(fz, fx), fy), {3, 1, 2}),   // 312
      perm(star(star(fz, fy), fx), {3, 2, 1}),   // 321
  };
  return cubes;
}

std::array<FlowElement, 6> sextuple_from_encoding(const FlowElement& g) {
  static const std::array<AlgebraHom, 6> decode = [] {
    auto via = [](int axis, int corner) {
      return induced_hom(
          compose_maps(catalog::quad_iota(axis, corner), catalog::sextuple_k(axis)));
    };
    return std::array<AlgebraHom, 6>{
        via(1, 4),  // 123
        via(1, 3),  // 132
        via(2, 3),  // 213
        via(1, 2),  // 231
        via(2, 2),  // 312
        via(1, 1),  // 321
    };
  }();
  std::array<FlowElement, 6> cubes = {
      apply_hom_flow(decode[0], g), apply_hom_flow(decode[1], g),
      apply_hom_flow(decode[2], g), apply_hom_flow(decode[3], g),
      apply_hom_flow(decode[4], g), apply_hom_flow(decode[5], g)};
  return cubes;
}

// Randomized inputs ----------------------------------------------------------------

VectorField random_field(Rng& rng, int k, int degree) {
  std::vector<Poly> comps;
  for (int i = 0; i < k; ++i) comps.push_back(rng.poly(k, degree));
  return VectorField(PolyMap(k, std::move(comps)));
}

FlowElement random_flow(Rng& rng, int k, const InfinitesimalObject& object, int degree,
                        bool id_based) {
  AlgebraPtr alg = algebra_of(object);
  const int n = object.var_count();
  const int arity = k + n;
  std::vector<int> widen(k);
  for (int i = 0; i < k; ++i) widen[i] = i;
  std::vector<Poly> coords;
  for (int i = 0; i < k; ++i) {
    Poly p = Poly::variable(arity, i);
    for (const auto& m : alg->basis()) {
      if (id_based && m.is_unit()) continue;
      Poly c = rng.poly(k, degree);
      if (c.is_zero()) continue;
      std::vector<int> dshift(n);
      for (int j = 0; j < n; ++j) dshift[j] = k + j;
      p = p + c.remap(arity, widen) * Poly::term(m.remap(arity, dshift), Rat(1));
    }
    coords.push_back(std::move(p));
  }
  return FlowElement(k, object, std::move(coords));
}

std::array<FlowElement, 3> random_compatible_squares(Rng& rng, int k, int degree,
                                                     bool id_based) {
  const Obj square = Obj::power(2);
  FlowElement common = random_flow(rng, k, square, degree, id_based);
  const Monomial cross = Monomial::var(2, 0).times(Monomial::var(2, 1));
  auto with_cross = [&](const FlowElement& base) {
    const int arity = k + 2;
    std::vector<int> widen(k), dshift = {k, k + 1};
    for (int i = 0; i < k; ++i) widen[i] = i;
    std::vector<Poly> coords;
    for (int i = 0; i < k; ++i) {
      Poly stripped = base.coords()[i].filtered([&](const Monomial& m) {
        return infinitesimal_part(m, k) != cross;
      });
      coords.push_back(stripped + rng.poly(k, degree).remap(arity, widen) *
                                      Poly::term(cross.remap(arity, dshift), Rat(1)));
    }
    return FlowElement(k, square, std::move(coords));
  };
  return {with_cross(common), with_cross(common), with_cross(common)};
}

std::array<FlowElement, 6> random_compatible_sextuple(Rng& rng, int k, int degree) {
  return sextuple_from_encoding(
      random_flow(rng, k, catalog::sextuple_encoding_object(), degree));
}

}  // namespace weil
