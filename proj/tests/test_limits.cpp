#include <doctest.h>

#include "weil/catalog.hpp"
#include "weil/errors.hpp"
#include "weil/rng.hpp"

using namespace weil;
using Obj = InfinitesimalObject;
using Map = InfinitesimalMap;

namespace {

WeilElement random_element(Rng& rng, const AlgebraPtr& a) {
  std::vector<Rat> coords;
  for (int i = 0; i < a->dim(); ++i) coords.push_back(rng.small_rat());
  return WeilElement::from_coords(a, coords);
}

}  // namespace

TEST_CASE("limit of a single node is the node") {
  WeilDiagram d;
  d.add_node("only", algebra_of(Obj::line()));
  CHECK(compute_limit(d).dim == 2);
}

TEST_CASE("two lines over a point") {
  auto nc = catalog::cone_tangent_pair();
  CHECK(compute_limit(nc.diagram).dim == 3);
  auto verdict = verify_cone(nc.diagram, nc.cone);
  CHECK(verdict.commutes);
  CHECK(verdict.bijective);
}

TEST_CASE("limit dimension is invariant under node reordering") {
  // Same cospan built with nodes added in two different orders.
  auto build = [](bool flip) {
    WeilDiagram d;
    AlgebraHom incl = induced_hom(Map::inclusion(Obj::pairwise(2), Obj::power(2)));
    if (flip) {
      d.add_node("C", algebra_of(Obj::pairwise(2)));
      d.add_node("B", algebra_of(Obj::power(2)));
      d.add_node("A", algebra_of(Obj::power(2)));
    } else {
      d.add_node("A", algebra_of(Obj::power(2)));
      d.add_node("B", algebra_of(Obj::power(2)));
      d.add_node("C", algebra_of(Obj::pairwise(2)));
    }
    d.add_arrow("A->C", "A", "C", incl);
    d.add_arrow("B->C", "B", "C", incl);
    return compute_limit(d).dim;
  };
  CHECK(build(false) == build(true));
  CHECK(build(false) == 5);
}

TEST_CASE("all standard cones are limiting") {
  for (const auto& nc : catalog::standard_cones()) {
    INFO(nc.name, " (", nc.anchor, ")");
    auto verdict = verify_cone(nc.diagram, nc.cone);
    CHECK(verdict.commutes);
    CHECK(verdict.bijective);
    CHECK(verdict.limit_dim == nc.expected_dim);
    CHECK(verdict.apex_dim == nc.expected_dim);
  }
}

TEST_CASE("wrong apex is rejected") {
  // W_{D^2} with its two slot projections is too big over the tangent-pair
  // cospan: dimension 4 against limit 3.
  auto nc = catalog::cone_tangent_pair();
  Cone wrong;
  wrong.apex = algebra_of(Obj::power(2));
  AlgebraHom l1 = induced_hom(Map::coordinates(Obj::line(), Obj::power(2), {1, 0}));
  AlgebraHom l2 = induced_hom(Map::coordinates(Obj::line(), Obj::power(2), {0, 1}));
  wrong.legs = {l1, l2, hom_compose(l1, nc.diagram.arrows()[0].hom)};
  auto verdict = verify_cone(nc.diagram, wrong);
  CHECK(verdict.commutes);
  CHECK(!verdict.bijective);
  CHECK(verdict.apex_dim == 4);
  CHECK(verdict.limit_dim == 3);
  CHECK_THROWS_AS(LimitKit(nc.diagram, wrong), NotALimit);
}

TEST_CASE("malformed cones are reported") {
  auto nc = catalog::cone_tangent_pair();
  Cone short_legs;
  short_legs.apex = nc.cone.apex;
  short_legs.legs = {nc.cone.legs[0]};
  CHECK_THROWS_AS(verify_cone(nc.diagram, short_legs), MismatchError);
}

TEST_CASE("lift through the microsquare pullback") {
  auto nc = catalog::cone_microsquare_pair();
  LimitKit kit(nc.diagram, nc.cone);
  auto wsq = algebra_of(Obj::power(2));

  // gamma1 = 2 + d1 + 3 d2 + 5 d1 d2, gamma2 = same but 9 d1 d2.
  WeilElement g1 = WeilElement::from_coords(wsq, {rat(2), rat(1), rat(3), rat(5)});
  WeilElement g2 = WeilElement::from_coords(wsq, {rat(2), rat(1), rat(3), rat(9)});
  WeilElement shared = nc.diagram.arrows()[0].hom.apply(g1);
  auto lifted = kit.lift({{g1}, {g2}, {shared}});
  REQUIRE(lifted.size() == 1);
  // The fresh slot carries the difference of the cross coefficients.
  CHECK(lifted[0].coeff(Monomial::var(3, 2)) == 4);
  CHECK(lifted[0].coeff(Monomial::var(3, 0)) == 1);
  CHECK(lifted[0].augmentation() == 2);

  // Round trip: pushing a random apex element through the legs and lifting
  // recovers it.
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    WeilElement apex = random_element(rng, nc.cone.apex);
    std::vector<std::vector<WeilElement>> family;
    for (const auto& leg : nc.cone.legs) family.push_back({leg.apply(apex)});
    auto back = kit.lift(family);
    CHECK(back[0] == apex);
  }

  // Breaking one agreement names the offending arrow.
  WeilElement g2bad = WeilElement::from_coords(wsq, {rat(2), rat(1), rat(4), rat(9)});
  try {
    kit.lift({{g1}, {g2bad}, {shared}});
    FAIL("expected IncompatibleFamily");
  } catch (const IncompatibleFamily& e) {
    CHECK(e.arrow == "B->C");
  }
}

TEST_CASE("lift width follows the family") {
  auto nc = catalog::cone_tangent_pair();
  LimitKit kit(nc.diagram, nc.cone);
  auto wd = algebra_of(Obj::line());
  auto w1 = algebra_of(Obj::terminal());
  std::vector<WeilElement> t1 = {WeilElement::from_coords(wd, {rat(0), rat(2)}),
                                 WeilElement::from_coords(wd, {rat(1), rat(0)})};
  std::vector<WeilElement> t2 = {WeilElement::from_coords(wd, {rat(0), rat(5)}),
                                 WeilElement::from_coords(wd, {rat(1), rat(-1)})};
  std::vector<WeilElement> base = {WeilElement::constant(w1, rat(0)),
                                   WeilElement::constant(w1, rat(1))};
  auto lifted = kit.lift({t1, t2, base});
  REQUIRE(lifted.size() == 2);
  CHECK(lifted[0].coeff(Monomial::var(2, 0)) == 2);
  CHECK(lifted[0].coeff(Monomial::var(2, 1)) == 5);
  CHECK(lifted[1].augmentation() == 1);
}
