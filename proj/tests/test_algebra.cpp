#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/catalog.hpp"
#include "weil/hom.hpp"
#include "weil/rng.hpp"

using namespace weil;
using Obj = InfinitesimalObject;
using Map = InfinitesimalMap;

namespace {

Poly v(int arity, int i) { return Poly::variable(arity, i - 1); }

// Independent dimension oracle: walk the full exponent box below the caps
// with an odometer and count monomials that avoid every ideal generator by
// trial division. No pruning, no shared code with the staircase search.
int brute_force_dim(const Obj& obj) {
  const int n = obj.var_count();
  std::vector<int> exps(n, 0);
  const auto gens = obj.ideal_generators();
  int count = 0;
  while (true) {
    Monomial m(exps);
    bool dead = false;
    for (const auto& g : gens)
      if (g.divides(m)) {
        dead = true;
        break;
      }
    if (!dead) ++count;
    int i = 0;
    for (; i < n; ++i) {
      if (++exps[i] < obj.caps()[i]) break;
      exps[i] = 0;
    }
    if (i == n) break;
  }
  return count;
}

WeilElement random_element(Rng& rng, const AlgebraPtr& a) {
  std::vector<Rat> coords;
  for (int i = 0; i < a->dim(); ++i) coords.push_back(rng.small_rat());
  return WeilElement::from_coords(a, coords);
}

}  // namespace

TEST_CASE("basis dimensions match the brute-force oracle") {
  CHECK(algebra_of(Obj::line())->dim() == 2);
  CHECK(algebra_of(Obj::pairwise(2))->dim() == 3);
  CHECK(algebra_of(Obj::higher(2))->dim() == 3);  // 1, d, d^2
  for (int n = 1; n <= 8; ++n) {
    CHECK(algebra_of(Obj::pairwise(n))->dim() == n + 1);
    CHECK(algebra_of(Obj::power(n))->dim() == (1 << n));
  }
  const Obj interesting[] = {
      catalog::pair_encoding_object(),       // expected 5
      catalog::axis_pair_encoding_object(1), // expected 10
      catalog::triple_encoding_object(),     // 6
      catalog::quad_encoding_object(1),      // 17
      catalog::quad_encoding_object(2),      // 17
      catalog::quad_encoding_object(3),      // 17
      catalog::sextuple_encoding_object(),   // 16
      oplus(Obj::power(3), Obj::power(3)),   // 15
      Obj::higher(3),                        // 4
  };
  const int expected[] = {5, 10, 6, 17, 17, 17, 16, 15, 4};
  for (std::size_t i = 0; i < std::size(interesting); ++i) {
    auto alg = algebra_of(interesting[i]);
    CHECK(alg->dim() == expected[i]);
    CHECK(alg->dim() == brute_force_dim(interesting[i]));
  }
}

TEST_CASE("basis is a staircase in graded-lex order") {
  auto e = algebra_of(catalog::triple_encoding_object());
  REQUIRE(e->dim() == 6);
  CHECK(e->basis()[0].is_unit());
  // Closure under division.
  for (const auto& m : e->basis()) {
    for (int i = 0; i < m.arity(); ++i) {
      if (m.exp(i) == 0) continue;
      std::vector<int> less = m.exponents();
      less[i] -= 1;
      CHECK(e->contains(Monomial(less)));
    }
  }
  // Deterministic order.
  for (int i = 0; i + 1 < e->dim(); ++i)
    CHECK(Monomial::cmp(e->basis()[i], e->basis()[i + 1]) < 0);
}

TEST_CASE("element arithmetic") {
  auto wd = algebra_of(Obj::line());
  WeilElement a = WeilElement::one(wd) + WeilElement::variable(wd, 0).scaled(rat(3));
  CHECK(elem_linear(a, WeilElement::zero(wd), rat(1), rat(5)) == a);
  CHECK((a - a).is_zero());
  // 2*(1+3d) + 1*d = 2 + 7d
  WeilElement combo = elem_linear(a, WeilElement::variable(wd, 0), rat(2), rat(1));
  CHECK(combo.coeff(Monomial::unit(1)) == 2);
  CHECK(combo.coeff(Monomial::var(1, 0)) == 7);

  // Nilpotency: d*d = 0 in W_D.
  WeilElement d = WeilElement::variable(wd, 0);
  CHECK((d * d).is_zero());

  // Cross relation kills d1*d2 over D(2) but not over D^2.
  auto wd2 = algebra_of(Obj::pairwise(2));
  WeilElement p = WeilElement::one(wd2) + WeilElement::variable(wd2, 0);
  WeilElement q = WeilElement::one(wd2) + WeilElement::variable(wd2, 1);
  CHECK((p * q).coords() == std::vector<Rat>{rat(1), rat(1), rat(1)});
  auto wsq = algebra_of(Obj::power(2));
  WeilElement ps = WeilElement::one(wsq) + WeilElement::variable(wsq, 0);
  WeilElement qs = WeilElement::one(wsq) + WeilElement::variable(wsq, 1);
  CHECK((ps * qs).coords() == std::vector<Rat>{rat(1), rat(1), rat(1), rat(1)});

  CHECK_THROWS_AS(p * ps, MismatchError);
}

TEST_CASE("multiplication is associative and commutative") {
  Rng rng(11);
  auto alg = algebra_of(catalog::pair_encoding_object());
  for (int trial = 0; trial < 25; ++trial) {
    WeilElement a = random_element(rng, alg), b = random_element(rng, alg),
                c = random_element(rng, alg);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("induced homs") {
  auto wd = algebra_of(Obj::line());
  auto wd2 = algebra_of(Obj::pairwise(2));

  // Addition map: a + b1 d1 + b2 d2 |-> a + (b1+b2) d.
  AlgebraHom fold = induced_hom(Map::make(Obj::line(), Obj::pairwise(2), {v(1, 1), v(1, 1)}));
  WeilElement x = WeilElement::from_coords(wd2, {rat(2), rat(3), rat(5)});
  CHECK(fold.apply(x).coords() == std::vector<Rat>{rat(2), rat(8)});

  // First-slot injection: d1 |-> d, d2 |-> 0.
  AlgebraHom slot1 = induced_hom(Map::coordinates(Obj::line(), Obj::pairwise(2), {1, 0}));
  CHECK(slot1.apply(x).coords() == std::vector<Rat>{rat(2), rat(3)});

  // Nilpotency-order collapse sends d to d^2.
  AlgebraHom sq = induced_hom(
      Map::make(Obj::higher(2), Obj::line(), {v(1, 1) * v(1, 1)}));
  WeilElement one_plus_d = WeilElement::from_coords(wd, {rat(1), rat(1)});
  WeilElement img = sq.apply(one_plus_d);
  CHECK(img.coeff(Monomial::var(1, 0, 2)) == 1);
  CHECK(img.coeff(Monomial::var(1, 0, 1)) == 0);

  CHECK(fold.is_multiplicative());
  CHECK(slot1.is_multiplicative());
  CHECK(sq.is_multiplicative());
}

TEST_CASE("hom algebra laws") {
  auto wd = algebra_of(Obj::line());
  AlgebraHom id = AlgebraHom::identity(wd);
  WeilElement x = WeilElement::from_coords(wd, {rat(4), rat(-7)});
  CHECK(hom_apply(id, x) == x);

  // Functoriality on a small composition chain.
  Map into1 = Map::coordinates(Obj::line(), Obj::pairwise(2), {1, 0});
  Map proj1 = Map::coordinates(Obj::pairwise(2), Obj::line(), {1});
  AlgebraHom direct = induced_hom(compose_maps(into1, proj1));
  AlgebraHom composite = hom_compose(induced_hom(proj1), induced_hom(into1));
  CHECK(direct == composite);
  CHECK(direct == id);

  // W_{i1} after W_{p1} is the identity on W_D.
  AlgebraHom wp1 = induced_hom(proj1);  // W_D -> W_{D(2)}
  AlgebraHom wi1 = induced_hom(into1);  // W_{D(2)} -> W_D
  CHECK(hom_compose(wp1, wi1) == id);

  CHECK_THROWS_AS(hom_compose(wi1, wi1), MismatchError);
}

TEST_CASE("functoriality on random chains") {
  Rng rng(31);
  Obj d = Obj::line(), d2 = Obj::pairwise(2), sq = Obj::power(2);
  std::vector<Map> pool;
  pool.push_back(Map::coordinates(d, d2, {1, 0}));
  pool.push_back(Map::make(d, d2, {v(1, 1), v(1, 1)}));
  pool.push_back(Map::inclusion(d2, sq));
  pool.push_back(Map::make(sq, d, {v(2, 1) * v(2, 2)}));
  pool.push_back(Map::coordinates(d2, d, {1}));
  for (const Map& f : pool)
    for (const Map& g : pool) {
      if (!(f.target() == g.source())) continue;
      AlgebraHom lhs = induced_hom(compose_maps(f, g));
      AlgebraHom rhs = hom_compose(induced_hom(g), induced_hom(f));
      CHECK(lhs == rhs);
      CHECK(lhs.is_multiplicative());
    }
  (void)rng;
}

TEST_CASE("homs preserve unit and augmentation") {
  Rng rng(5);
  AlgebraHom h = induced_hom(catalog::sextuple_k(1));
  CHECK(h.is_multiplicative());
  for (int trial = 0; trial < 10; ++trial) {
    WeilElement x = random_element(rng, h.domain());
    CHECK(h.apply(x).augmentation() == x.augmentation());
  }
}

TEST_CASE("product algebra") {
  auto wd = algebra_of(Obj::line());
  auto prod = product_algebra(*wd, *wd);
  CHECK(prod->dim() == 4);
  CHECK(prod->object() == Obj::power(2));

  auto mixed = product_algebra(*algebra_of(Obj::pairwise(2)), *wd);
  CHECK(mixed->dim() == 6);

  auto unit = product_algebra(*algebra_of(Obj::terminal()), *wd);
  CHECK(unit->dim() == 2);
  CHECK(unit->object() == Obj::line());
}
