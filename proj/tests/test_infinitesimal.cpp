#include <doctest.h>

#include "weil/errors.hpp"
#include "weil/infinitesimal.hpp"
#include "weil/rng.hpp"

using namespace weil;
using Obj = InfinitesimalObject;
using Map = InfinitesimalMap;

namespace {

Poly v(int arity, int i) { return Poly::variable(arity, i - 1); }

Obj random_simplicial(Rng& rng, int max_vars) {
  int n = static_cast<int>(rng.uniform(1, max_vars));
  std::vector<std::vector<int>> rel;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.uniform(0, 1) == 0) rel.push_back({i, j});
  return Obj::simplicial(n, rel);
}

}  // namespace

TEST_CASE("object construction and sugar") {
  Obj d = Obj::make(1, {2}, {});
  CHECK(d == Obj::line());
  CHECK(d.var_count() == 1);

  Obj d2pair = Obj::make(2, {2, 2}, {{1, 2}});
  CHECK(d2pair == Obj::pairwise(2));

  Obj e = Obj::make(4, {2, 2, 2, 2}, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(e.relations().size() == 5);
  CHECK(e.is_simplicial());
  CHECK(!e.is_power());

  CHECK(Obj::terminal().var_count() == 0);
  CHECK(Obj::higher(2).caps() == std::vector<int>{3});
}

TEST_CASE("object construction errors") {
  CHECK_THROWS_AS(Obj::make(2, {2, 2}, {{1, 3}}), MismatchError);   // out of range
  CHECK_THROWS_AS(Obj::make(2, {1, 2}, {}), MismatchError);          // cap < 2
  CHECK_THROWS_AS(Obj::make(3, {2, 2, 2}, {{2, 1}}), MismatchError); // not increasing
}

TEST_CASE("relation normalization") {
  // (1,2) makes (1,2,3) redundant; duplicates collapse.
  Obj a = Obj::simplicial(3, {{1, 2, 3}, {1, 2}, {1, 2}});
  CHECK(a.relations().size() == 1);
  CHECK(a == Obj::simplicial(3, {{1, 2}}));
  // Normalization is idempotent: rebuilding from the stored relations is a
  // fixed point.
  std::vector<Monomial> rel = a.relations();
  Obj again = Obj::with_monomial_relations(3, {2, 2, 2}, rel);
  CHECK(again == a);
}

TEST_CASE("ideal membership") {
  Obj e = Obj::simplicial(4, {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(e.in_ideal(Monomial({2, 0, 0, 0})));
  CHECK(e.in_ideal(Monomial({1, 0, 1, 0})));
  CHECK(!e.in_ideal(Monomial({1, 1, 0, 0})));
  CHECK(!e.in_ideal(Monomial({0, 0, 0, 1})));
}

TEST_CASE("oplus on simplicial objects") {
  CHECK(oplus(Obj::line(), Obj::line()) == Obj::pairwise(2));
  // Associativity lands on D(3) for three lines.
  Obj l = oplus(oplus(Obj::line(), Obj::line()), Obj::line());
  Obj r = oplus(Obj::line(), oplus(Obj::line(), Obj::line()));
  CHECK(l == r);
  CHECK(l == Obj::pairwise(3));

  Obj cubes = oplus(Obj::power(3), Obj::power(3));
  CHECK(cubes.var_count() == 6);
  CHECK(cubes.relations().size() == 9);  // all cross pairs (i, j+3)
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j)
      CHECK(cubes.in_ideal(Monomial::var(6, i).times(Monomial::var(6, j))));

  CHECK_THROWS_AS(oplus(Obj::higher(2), Obj::line()), MismatchError);
}

TEST_CASE("oplus associativity on random simplicial objects") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Obj a = random_simplicial(rng, 3), b = random_simplicial(rng, 3),
        c = random_simplicial(rng, 3);
    CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
  }
}

TEST_CASE("map well-definedness") {
  // d |-> (d,d) into D(2) is fine.
  Map plus = Map::make(Obj::line(), Obj::pairwise(2), {v(1, 1), v(1, 1)});
  CHECK(plus.components().size() == 2);

  // (d1,d2) |-> (d1,d2,d1*d2) into D^3{(1,3),(2,3)} is fine.
  Obj target = Obj::simplicial(3, {{1, 3}, {2, 3}});
  Map psi = Map::make(Obj::power(2), target, {v(2, 1), v(2, 2), v(2, 1) * v(2, 2)});
  CHECK(psi.target() == target);

  // d1+d2 : D^2 -> D squares to 2*d1*d2, which survives reduction.
  try {
    Map::make(Obj::power(2), Obj::line(), {v(2, 1) + v(2, 2)});
    FAIL("expected IllDefinedMap");
  } catch (const IllDefinedMap& e) {
    CHECK(e.generator == "d1^2");
    CHECK(e.residue == "2*d1*d2");
  }

  // But the same formula is a valid map out of D(2).
  Map fold = Map::make(Obj::pairwise(2), Obj::line(), {v(2, 1) + v(2, 2)});
  CHECK(fold.source() == Obj::pairwise(2));

  // Constant terms are rejected outright.
  CHECK_THROWS_AS(
      Map::make(Obj::line(), Obj::line(), {v(1, 1) + Poly::constant(1, rat(1))}),
      NonzeroConstantTerm);

  // Nilpotency-order collapse: d in D_2 |-> d^2 in D.
  Map sq = Map::make(Obj::higher(2), Obj::line(), {v(1, 1) * v(1, 1)});
  CHECK(sq.source() == Obj::higher(2));
}

TEST_CASE("compose_maps") {
  Obj d = Obj::line(), d2 = Obj::pairwise(2);
  Map into1 = Map::coordinates(d, d2, {1, 0});  // d |-> (d,0)
  Map into2 = Map::coordinates(d, d2, {0, 1});  // d |-> (0,d)
  Map proj1 = Map::coordinates(d2, d, {1});     // (d1,d2) |-> d1

  CHECK(compose_maps(into1, proj1) == Map::identity(d));
  CHECK(compose_maps(into2, proj1) == Map::coordinates(d, d, {0}));

  Map f = Map::make(Obj::power(2), Obj::simplicial(3, {{1, 3}, {2, 3}}),
                    {v(2, 1), v(2, 2), v(2, 1) * v(2, 2)});
  CHECK(compose_maps(f, Map::identity(f.target())) == f);
  CHECK_THROWS_AS(compose_maps(proj1, proj1), MismatchError);
}

TEST_CASE("combine_maps") {
  Obj d = Obj::line(), d2 = Obj::pairwise(2);
  Map id = Map::identity(d);
  Map glued = combine_maps({id, id});
  CHECK(glued.source() == d2);
  CHECK(glued.components()[0] == v(2, 1) + v(2, 2));

  CHECK(combine_maps({id}) == id);

  CHECK_THROWS_AS(combine_maps({id, Map::coordinates(d, d2, {1, 0})}), MismatchError);

  // Restriction to each block recovers the operand.
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Obj s1 = random_simplicial(rng, 2), s2 = random_simplicial(rng, 2);
    Map f1 = Map::coordinates(s1, d, {static_cast<int>(rng.uniform(0, s1.var_count()))});
    Map f2 = Map::coordinates(s2, d, {static_cast<int>(rng.uniform(0, s2.var_count()))});
    Map both = combine_maps({f1, f2});
    Map e1 = Map::block_embedding({s1, s2}, 0);
    Map e2 = Map::block_embedding({s1, s2}, 1);
    CHECK(compose_maps(e1, both) == f1);
    CHECK(compose_maps(e2, both) == f2);
  }
}

TEST_CASE("composition of valid maps never throws") {
  Rng rng(99);
  Obj d = Obj::line(), d2 = Obj::pairwise(2), sq = Obj::power(2);
  std::vector<Map> pool;
  pool.push_back(Map::coordinates(d, d2, {1, 0}));
  pool.push_back(Map::coordinates(d, d2, {0, 1}));
  pool.push_back(Map::make(d, d2, {v(1, 1), v(1, 1)}));
  pool.push_back(Map::inclusion(d2, sq));
  pool.push_back(Map::make(sq, d, {v(2, 1) * v(2, 2)}));
  pool.push_back(Map::coordinates(d2, d, {1}));
  for (int trial = 0; trial < 200; ++trial) {
    const Map& f = pool[rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1)];
    for (const Map& g : pool) {
      if (!(f.target() == g.source())) continue;
      CHECK_NOTHROW(compose_maps(f, g));
    }
  }
}
