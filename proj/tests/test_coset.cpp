#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbipres/coset.hpp"
#include "orbipres/quiver.hpp"
#include "orbipres/surface.hpp"

using namespace orbipres;

TEST_CASE("single-relator collapse") {
  Presentation P;
  P.generators = {"a"};
  P.relators.push_back({{{0, 1}}, {}});
  CosetTable t = todd_coxeter(P, {}, 100);
  REQUIRE(t.status == CosetTable::Status::complete);
  CHECK(t.index == 1);
}

TEST_CASE("order of the reflection quotient at T0") {
  Presentation P = relations_from_quiver(quiver_from_triangulation(initial_triangulation({3, 3})),
                                         Variant::reflection);
  for (auto strat : {TCStrategy::hlt_lookahead, TCStrategy::felsch}) {
    CosetTable t = todd_coxeter(P, {}, 1 << 16, strat);
    REQUIRE(t.status == CosetTable::Status::complete);
    CHECK(t.index == 54);
  }
}

TEST_CASE("index of N in Artin B_n mod s^d") {
  for (int n : {2, 3})
    for (int d : {2, 3, 4, 5}) {
      Presentation P = reference_presentation(d, n, Reference::artin_b_mod_sd);
      CosetTable t = todd_coxeter(P, n_subgroup_generators(P), 1 << 18);
      REQUIRE(t.status == CosetTable::Status::complete);
      CHECK(t.index == (size_t)d);
      // coset representatives are the powers of s
      CHECK(cosets_are_powers_of(t, 0));
    }
}

TEST_CASE("capped runs return no conclusion") {
  // Z x Z: infinite index over the trivial subgroup
  Presentation P;
  P.generators = {"a", "b"};
  P.relators.push_back({{{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}});
  CosetTable t = todd_coxeter(P, {}, 64);
  CHECK(t.status == CosetTable::Status::capped);
}

TEST_CASE("strategies agree on W(D_n) orders") {
  for (int n : {2, 3, 4}) {
    Presentation P = relations_from_quiver(quiver_from_triangulation(initial_triangulation({n, 2})),
                                           Variant::reflection);
    size_t expect = 1;
    for (int i = 2; i <= n; ++i) expect *= i;
    for (int i = 1; i < n; ++i) expect *= 2;
    CosetTable h = todd_coxeter(P, {}, 1 << 18, TCStrategy::hlt_lookahead);
    CosetTable f = todd_coxeter(P, {}, 1 << 18, TCStrategy::felsch);
    REQUIRE(h.status == CosetTable::Status::complete);
    REQUIRE(f.status == CosetTable::Status::complete);
    CHECK(h.index == expect);
    CHECK(f.index == expect);
  }
}

TEST_CASE("csv dump shape") {
  Presentation P;
  P.generators = {"a"};
  P.relators.push_back({power({{0, 1}}, 3), {}});
  CosetTable t = todd_coxeter(P, {}, 100);
  REQUIRE(t.status == CosetTable::Status::complete);
  CHECK(t.index == 3);
  std::string csv = t.to_csv(P.generators);
  CHECK(csv.find("coset,a,a^-1\n") == 0);
}
