#include "weil/catalog.hpp"

#include "weil/errors.hpp"

namespace weil::catalog {

namespace {

using Obj = InfinitesimalObject;
using Map = InfinitesimalMap;

// Product of 1-based variables as a polynomial.
Poly prod(int arity, std::initializer_list<int> vars) {
  Poly p = Poly::constant(arity, Rat(1));
  for (int v : vars) p = p * Poly::variable(arity, v - 1);
  return p;
}

Poly var1(int arity, int v) { return Poly::variable(arity, v - 1); }

int axis_check(int axis) {
  if (axis < 1 || axis > 3) throw MismatchError("axis must be 1, 2 or 3");
  return axis;
}

}  // namespace

const Obj& pair_encoding_object() {
  static const Obj obj = Obj::simplicial(3, {{1, 3}, {2, 3}});
  return obj;
}

const Obj& triple_encoding_object() {
  static const Obj obj = Obj::simplicial(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  return obj;
}

const Obj& axis_base_object(int axis) {
  axis_check(axis);
  static const Obj objs[3] = {
      Obj::simplicial(3, {{2, 3}}),
      Obj::simplicial(3, {{1, 3}}),
      Obj::simplicial(3, {{1, 2}}),
  };
  return objs[axis - 1];
}

const Obj& axis_pair_encoding_object(int axis) {
  axis_check(axis);
  static const Obj objs[3] = {
      Obj::simplicial(4, {{2, 4}, {3, 4}}),
      Obj::simplicial(4, {{1, 4}, {3, 4}}),
      Obj::simplicial(4, {{1, 4}, {2, 4}}),
  };
  return objs[axis - 1];
}

const Obj& quad_encoding_object(int axis) {
  axis_check(axis);
  static const Obj objs[3] = {
      Obj::simplicial(7, {{2, 6}, {3, 6}, {4, 6}, {5, 6},
                          {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7},
                          {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
      Obj::simplicial(7, {{1, 6}, {3, 6}, {4, 6}, {5, 6},
                          {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7},
                          {1, 4}, {1, 5}, {3, 4}, {3, 5}}),
      Obj::simplicial(7, {{1, 6}, {2, 6}, {4, 6}, {5, 6},
                          {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7},
                          {1, 4}, {1, 5}, {2, 4}, {2, 5}}),
  };
  return objs[axis - 1];
}

const Obj& sextuple_encoding_object() {
  static const Obj obj = Obj::simplicial(
      8, {{2, 4}, {3, 4}, {1, 5}, {3, 5}, {1, 6}, {2, 6},
          {4, 5}, {4, 6}, {5, 6},
          {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7},
          {1, 8}, {2, 8}, {3, 8}, {4, 8}, {5, 8}, {6, 8}, {7, 8}});
  return obj;
}

Map pair_first_leg() {
  return Map::coordinates(Obj::power(2), pair_encoding_object(), {1, 2, 0});
}

Map pair_second_leg() {
  return Map::make(Obj::power(2), pair_encoding_object(),
                   {var1(2, 1), var1(2, 2), prod(2, {1, 2})});
}

Map pair_extract() {
  return Map::coordinates(Obj::line(), pair_encoding_object(), {0, 0, 1});
}

Map axis_first_leg(int axis) {
  return Map::coordinates(Obj::power(3), axis_pair_encoding_object(axis), {1, 2, 3, 0});
}

Map axis_second_leg(int axis) {
  axis_check(axis);
  // The fresh slot receives the cross product of the two non-axis variables.
  static const std::pair<int, int> cross[3] = {{2, 3}, {1, 3}, {1, 2}};
  auto [a, b] = cross[axis - 1];
  return Map::make(Obj::power(3), axis_pair_encoding_object(axis),
                   {var1(3, 1), var1(3, 2), var1(3, 3), prod(3, {a, b})});
}

Map axis_extract(int axis) {
  axis_check(axis);
  static const std::vector<int> idx[3] = {{1, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2}};
  return Map::coordinates(Obj::power(2), axis_pair_encoding_object(axis), idx[axis - 1]);
}

Map quad_pair_inclusion(int axis) {
  axis_check(axis);
  static const std::vector<int> idx[3] = {{1, 0, 0, 2}, {0, 1, 0, 2}, {0, 0, 1, 2}};
  return Map::coordinates(Obj::pairwise(2), axis_pair_encoding_object(axis), idx[axis - 1]);
}

Map quad_eta(int axis, int which) {
  axis_check(axis);
  if (which == 1)
    return Map::coordinates(axis_pair_encoding_object(axis), quad_encoding_object(axis),
                            {1, 2, 3, 0, 0, 4, 0});
  if (which != 2) throw MismatchError("eta selector must be 1 or 2");
  // Second leg: operand block moved aside, fresh block in front, last slot
  // picks up the axis-variable times the difference slot.
  switch (axis) {
    case 1:
      return Map::make(axis_pair_encoding_object(1), quad_encoding_object(1),
                       {var1(4, 1), Poly::zero(4), Poly::zero(4), var1(4, 2), var1(4, 3),
                        var1(4, 4), prod(4, {1, 4})});
    case 2:
      return Map::make(axis_pair_encoding_object(2), quad_encoding_object(2),
                       {Poly::zero(4), var1(4, 2), Poly::zero(4), var1(4, 1), var1(4, 3),
                        var1(4, 4), prod(4, {2, 4})});
    default:
      return Map::make(axis_pair_encoding_object(3), quad_encoding_object(3),
                       {Poly::zero(4), Poly::zero(4), var1(4, 3), var1(4, 1), var1(4, 2),
                        var1(4, 4), prod(4, {3, 4})});
  }
}

Map quad_iota(int axis, int corner) {
  axis_check(axis);
  switch (corner) {
    case 1: return compose_maps(axis_first_leg(axis), quad_eta(axis, 1));
    case 2: return compose_maps(axis_second_leg(axis), quad_eta(axis, 1));
    case 3: return compose_maps(axis_first_leg(axis), quad_eta(axis, 2));
    case 4: return compose_maps(axis_second_leg(axis), quad_eta(axis, 2));
    default: throw MismatchError("iota corner must be 1..4");
  }
}

Map quad_extract(int axis) {
  return Map::coordinates(Obj::line(), quad_encoding_object(axis), {0, 0, 0, 0, 0, 0, 1});
}

Map sextuple_k(int axis) {
  axis_check(axis);
  const Obj& g = sextuple_encoding_object();
  switch (axis) {
    case 1:
      return Map::make(
          quad_encoding_object(1), g,
          {var1(7, 1), var1(7, 2) + var1(7, 4), var1(7, 3) + var1(7, 5),
           var1(7, 6) - prod(7, {2, 3}) - prod(7, {4, 5}), -prod(7, {1, 5}),
           prod(7, {1, 4}), var1(7, 7) + prod(7, {1, 2, 3}), prod(7, {1, 2, 3})});
    case 2:
      return Map::make(
          quad_encoding_object(2), g,
          {var1(7, 1) + var1(7, 5), var1(7, 2), var1(7, 3) + var1(7, 4),
           -prod(7, {2, 3}), var1(7, 6) - prod(7, {1, 3}) - prod(7, {4, 5}),
           prod(7, {1, 2}), prod(7, {2, 4, 5}), var1(7, 7)});
    default:
      return Map::make(
          quad_encoding_object(3), g,
          {var1(7, 1) + var1(7, 4), var1(7, 2) + var1(7, 5), var1(7, 3),
           -prod(7, {4, 5}), -prod(7, {1, 3}), var1(7, 6), -var1(7, 7),
           -var1(7, 7) + prod(7, {3, 4, 5})});
  }
}

Map sextuple_h(int axis, int corner) {
  axis_check(axis);
  // Each corner object is shared by two of the quad encodings; the first
  // block comes from corners (2,3), the second from corners (4,1).
  auto pick = [&](int a, int c1, int c2) {
    return combine_maps({quad_iota(a, c1), quad_iota(a, c2)});
  };
  switch (corner) {
    case 12:
      if (axis == 1) return pick(1, 2, 3);
      if (axis == 2) return pick(2, 4, 1);
      break;
    case 23:
      if (axis == 2) return pick(2, 2, 3);
      if (axis == 3) return pick(3, 4, 1);
      break;
    case 31:
      if (axis == 3) return pick(3, 2, 3);
      if (axis == 1) return pick(1, 4, 1);
      break;
    default:
      throw MismatchError("corner must be 12, 23 or 31");
  }
  throw MismatchError("axis does not touch the requested corner");
}

Map sextuple_extract(int expr) {
  const Obj& g = sextuple_encoding_object();
  switch (expr) {
    case 1: return Map::coordinates(Obj::line(), g, {0, 0, 0, 0, 0, 0, 1, 0});
    case 2: return Map::coordinates(Obj::line(), g, {0, 0, 0, 0, 0, 0, 0, 1});
    case 3: return Map::coordinates(Obj::line(), g, {0, 0, 0, 0, 0, 0, -1, -1});
    default: throw MismatchError("expression selector must be 1, 2 or 3");
  }
}

namespace {

Map terminal_point(const Obj& target) {
  return Map::make(Obj::terminal(), target,
                   std::vector<Poly>(target.var_count(), Poly::zero(0)));
}

// Cospan A -> C <- B with a three-legged cone; the C leg is the composite.
NamedCone cospan(std::string name, std::string anchor, const Obj& side, const Obj& common,
                 const Map& restrictA, const Map& restrictB, const Obj& apex,
                 const Map& legA, const Map& legB, int expected) {
  NamedCone nc;
  nc.name = std::move(name);
  nc.anchor = std::move(anchor);
  nc.expected_dim = expected;
  nc.diagram.add_node("A", algebra_of(side));
  nc.diagram.add_node("B", algebra_of(side));
  nc.diagram.add_node("C", algebra_of(common));
  AlgebraHom ra = induced_hom(restrictA);
  AlgebraHom rb = induced_hom(restrictB);
  nc.diagram.add_arrow("A->C", "A", "C", ra);
  nc.diagram.add_arrow("B->C", "B", "C", rb);
  nc.cone.apex = algebra_of(apex);
  AlgebraHom la = induced_hom(legA);
  AlgebraHom lb = induced_hom(legB);
  AlgebraHom lc = hom_compose(la, ra);
  nc.cone.legs = {la, lb, lc};
  return nc;
}

}  // namespace

NamedCone cone_tangent_pair() {
  NamedCone nc;
  nc.name = "tangent-pair";
  nc.anchor = "Prop 3.1";
  nc.expected_dim = 3;
  const Obj line = Obj::line();
  nc.diagram.add_node("T1", algebra_of(line));
  nc.diagram.add_node("T2", algebra_of(line));
  nc.diagram.add_node("P", algebra_of(Obj::terminal()));
  AlgebraHom aug = induced_hom(terminal_point(line));
  nc.diagram.add_arrow("T1->P", "T1", "P", aug);
  nc.diagram.add_arrow("T2->P", "T2", "P", aug);
  const Obj d2 = Obj::pairwise(2);
  nc.cone.apex = algebra_of(d2);
  AlgebraHom l1 = induced_hom(Map::coordinates(line, d2, {1, 0}));
  AlgebraHom l2 = induced_hom(Map::coordinates(line, d2, {0, 1}));
  nc.cone.legs = {l1, l2, hom_compose(l1, aug)};
  return nc;
}

NamedCone cone_microsquare_pair() {
  const Obj square = Obj::power(2);
  Map restrict = Map::inclusion(Obj::pairwise(2), square);
  return cospan("microsquare-pair", "Prop 5.1", square, Obj::pairwise(2), restrict,
                restrict, pair_encoding_object(), pair_first_leg(), pair_second_leg(), 5);
}

NamedCone cone_triple_encoding() {
  NamedCone nc;
  nc.name = "triple-encoding";
  nc.anchor = "Thm 5.3 / Lemma 5.4";
  nc.expected_dim = 6;
  const Obj square = Obj::power(2);
  const Obj d2 = Obj::pairwise(2);
  AlgebraHom restrict = induced_hom(Map::inclusion(d2, square));
  for (const char* n : {"A1", "A2", "A3"}) nc.diagram.add_node(n, algebra_of(square));
  for (const char* n : {"C12", "C13", "C23"}) nc.diagram.add_node(n, algebra_of(d2));
  nc.diagram.add_arrow("A1->C12", "A1", "C12", restrict);
  nc.diagram.add_arrow("A2->C12", "A2", "C12", restrict);
  nc.diagram.add_arrow("A1->C13", "A1", "C13", restrict);
  nc.diagram.add_arrow("A3->C13", "A3", "C13", restrict);
  nc.diagram.add_arrow("A2->C23", "A2", "C23", restrict);
  nc.diagram.add_arrow("A3->C23", "A3", "C23", restrict);
  const Obj& e = triple_encoding_object();
  nc.cone.apex = algebra_of(e);
  AlgebraHom l1 = induced_hom(Map::coordinates(square, e, {1, 2, 0, 0}));
  AlgebraHom l2 = induced_hom(
      Map::make(square, e, {var1(2, 1), var1(2, 2), prod(2, {1, 2}), Poly::zero(2)}));
  AlgebraHom l3 = induced_hom(
      Map::make(square, e, {var1(2, 1), var1(2, 2), Poly::zero(2), prod(2, {1, 2})}));
  nc.cone.legs = {l1, l2, l3, hom_compose(l1, restrict), hom_compose(l1, restrict),
                  hom_compose(l2, restrict)};
  return nc;
}

NamedCone cone_axis_pair(int axis) {
  axis_check(axis);
  static const char* anchors[3] = {"Prop 5.5", "Prop 5.6", "Prop 5.7"};
  Map restrict = Map::inclusion(axis_base_object(axis), Obj::power(3));
  return cospan("axis-" + std::to_string(axis) + "-pair", anchors[axis - 1], Obj::power(3),
                axis_base_object(axis), restrict, restrict, axis_pair_encoding_object(axis),
                axis_first_leg(axis), axis_second_leg(axis), 10);
}

NamedCone cone_quad_encoding(int axis) {
  axis_check(axis);
  static const char* anchors[3] = {"Prop 5.9", "Prop 5.10", "Prop 5.11"};
  Map restrict = quad_pair_inclusion(axis);
  return cospan("quad-encoding-" + std::to_string(axis), anchors[axis - 1],
                axis_pair_encoding_object(axis), Obj::pairwise(2), restrict, restrict,
                quad_encoding_object(axis), quad_eta(axis, 1), quad_eta(axis, 2), 17);
}

NamedCone cone_bracket_factorization() {
  NamedCone nc;
  nc.name = "bracket-factorization";
  nc.anchor = "Thm 4.6";
  nc.expected_dim = 2;
  const Obj line = Obj::line();
  const Obj square = Obj::power(2);
  nc.diagram.add_node("N", algebra_of(square));
  nc.diagram.add_node("T", algebra_of(line));
  AlgebraHom slot1 = induced_hom(Map::coordinates(line, square, {1, 0}));
  AlgebraHom slot2 = induced_hom(Map::coordinates(line, square, {0, 1}));
  AlgebraHom zero = induced_hom(Map::coordinates(line, square, {0, 0}));
  nc.diagram.add_arrow("first-slot", "N", "T", slot1);
  nc.diagram.add_arrow("second-slot", "N", "T", slot2);
  nc.diagram.add_arrow("zero-slot", "N", "T", zero);
  nc.cone.apex = algebra_of(line);
  AlgebraHom ln = induced_hom(Map::make(square, line, {prod(2, {1, 2})}));
  nc.cone.legs = {ln, hom_compose(ln, slot1)};
  return nc;
}

NamedCone cone_sextuple_encoding() {
  NamedCone nc;
  nc.name = "sextuple-encoding";
  nc.anchor = "Thm 5.12 / Lemma 5.13";
  nc.expected_dim = 16;
  const Obj block = oplus(Obj::power(3), Obj::power(3));
  for (int i = 1; i <= 3; ++i)
    nc.diagram.add_node("E" + std::to_string(i), algebra_of(quad_encoding_object(i)));
  for (const char* n : {"B12", "B23", "B31"}) nc.diagram.add_node(n, algebra_of(block));
  AlgebraHom h112 = induced_hom(sextuple_h(1, 12));
  AlgebraHom h212 = induced_hom(sextuple_h(2, 12));
  AlgebraHom h223 = induced_hom(sextuple_h(2, 23));
  AlgebraHom h323 = induced_hom(sextuple_h(3, 23));
  AlgebraHom h331 = induced_hom(sextuple_h(3, 31));
  AlgebraHom h131 = induced_hom(sextuple_h(1, 31));
  nc.diagram.add_arrow("E1->B12", "E1", "B12", h112);
  nc.diagram.add_arrow("E2->B12", "E2", "B12", h212);
  nc.diagram.add_arrow("E2->B23", "E2", "B23", h223);
  nc.diagram.add_arrow("E3->B23", "E3", "B23", h323);
  nc.diagram.add_arrow("E3->B31", "E3", "B31", h331);
  nc.diagram.add_arrow("E1->B31", "E1", "B31", h131);
  nc.cone.apex = algebra_of(sextuple_encoding_object());
  AlgebraHom k1 = induced_hom(sextuple_k(1));
  AlgebraHom k2 = induced_hom(sextuple_k(2));
  AlgebraHom k3 = induced_hom(sextuple_k(3));
  nc.cone.legs = {k1, k2, k3, hom_compose(k1, h112), hom_compose(k2, h223),
                  hom_compose(k3, h331)};
  return nc;
}

std::vector<NamedCone> standard_cones() {
  std::vector<NamedCone> all;
  all.push_back(cone_tangent_pair());
  all.push_back(cone_microsquare_pair());
  all.push_back(cone_triple_encoding());
  for (int i = 1; i <= 3; ++i) all.push_back(cone_axis_pair(i));
  for (int i = 1; i <= 3; ++i) all.push_back(cone_quad_encoding(i));
  all.push_back(cone_bracket_factorization());
  all.push_back(cone_sextuple_encoding());
  return all;
}

}  // namespace weil::catalog
