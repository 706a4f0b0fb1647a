#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "orbipres/abelian.hpp"
#include "orbipres/present.hpp"
#include "orbipres/surface.hpp"

using namespace orbipres;

namespace {

// relator up to cyclic rotation and inversion
Word canonical_relator(const Word& w0) {
  Word best;
  for (Word w : {reduced(w0), inverse(reduced(w0))}) {
    for (size_t r = 0; r < std::max<size_t>(w.size(), 1); ++r) {
      Word rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

std::multiset<Word> canonical_relators(const Presentation& P) {
  std::multiset<Word> out;
  for (const auto& w : P.relator_words()) out.insert(canonical_relator(w));
  return out;
}

}  // namespace

TEST_CASE("T0 braid presentation matches the worked relator list, n=3 d=3") {
  Presentation P = relations_from_quiver(quiver_from_triangulation(initial_triangulation({3, 3})),
                                         Variant::braid);
  std::vector<std::string> g{"s1", "s2", "s3"};
  std::multiset<Word> expect;
  expect.insert(canonical_relator(concat(word_from_string("s1 s3 s1", g),
                                         inverse(word_from_string("s3 s1 s3", g)))));
  expect.insert(canonical_relator(concat(word_from_string("s2 s3 s2", g),
                                         inverse(word_from_string("s3 s2 s3", g)))));
  expect.insert(canonical_relator(concat(word_from_string("s1 s2 s1", g),
                                         inverse(word_from_string("s2 s1 s2", g)))));
  expect.insert(canonical_relator(
      concat(word_from_string("s3 s2 s1 s3 s2 s1", g),
             inverse(word_from_string("s2 s1 s3 s2 s1 s3", g)))));
  CHECK(canonical_relators(P) == expect);
}

TEST_CASE("reflection variant appends the squares") {
  Presentation Pb = relations_from_quiver(quiver_from_triangulation(initial_triangulation({3, 3})),
                                          Variant::braid);
  Presentation Pr = relations_from_quiver(quiver_from_triangulation(initial_triangulation({3, 3})),
                                          Variant::reflection);
  CHECK(Pr.relators.size() == Pb.relators.size() + 3);
}

TEST_CASE("labelled 3-cycle relations, d=2: two relators of four letters per side") {
  DecoratedQuiver L;
  L.n = 3;
  L.d = 2;
  L.arrows = {{0, 1}, {1, 2}, {2, 0}};
  L.labeled_cycle = std::vector<int>{0, 1, 2};
  Presentation P = relations_from_quiver(L, Variant::braid);
  std::vector<std::string> g{"s1", "s2", "s3"};
  std::multiset<Word> cyc;
  for (const auto& rel : P.relators)
    if (rel.lhs.size() == 4) cyc.insert(canonical_relator(rel.word()));
  std::multiset<Word> expect;
  expect.insert(canonical_relator(concat(word_from_string("s1 s2 s3 s1", g),
                                         inverse(word_from_string("s2 s3 s1 s2", g)))));
  expect.insert(canonical_relator(concat(word_from_string("s2 s3 s1 s2", g),
                                         inverse(word_from_string("s3 s1 s2 s3", g)))));
  CHECK(cyc == expect);
  // no_cycle drops exactly those
  Presentation H = relations_from_quiver(L, Variant::no_cycle);
  CHECK(H.relators.size() + 2 == P.relators.size());
}

TEST_CASE("BMR reference equals the T0 quiver presentation") {
  for (int d : {2, 3, 4})
    for (int n : {2, 3, 4, 5}) {
      Presentation ref = reference_presentation(d, n, Reference::bmr_braid);
      Presentation quiv = relations_from_quiver(
          quiver_from_triangulation(initial_triangulation({n, d})), Variant::braid);
      CHECK(canonical_relators(ref) == canonical_relators(quiv));
    }
}

TEST_CASE("Artin B_n mod s^d reference") {
  Presentation P = reference_presentation(3, 2, Reference::artin_b_mod_sd);
  CHECK(P.generators == std::vector<std::string>{"s", "t2"});
  REQUIRE(P.relators.size() == 2);
  CHECK(word_to_string(P.relators[0].lhs, P.generators) == "s t2 s t2");
  CHECK(word_to_string(P.relators[0].rhs, P.generators) == "t2 s t2 s");
  CHECK(word_to_string(P.relators[1].lhs, P.generators) == "s s s");

  for (int n : {2, 3, 4, 5}) {
    Presentation Pn = reference_presentation(2, n, Reference::artin_b_mod_sd);
    size_t braids = n - 2;
    size_t comms = (n - 1) * (n - 2) / 2;
    CHECK(Pn.relators.size() == braids + comms + 1 + 1);
  }
}

TEST_CASE("relator emission is deterministic") {
  auto q = quiver_from_triangulation(initial_triangulation({4, 3}));
  Presentation a = relations_from_quiver(q, Variant::braid);
  Presentation b = relations_from_quiver(q, Variant::braid);
  CHECK(to_text(a) == to_text(b));
}

TEST_CASE("every two-sided relator family has equal side lengths") {
  FlipGraph g = enumerate_flip_graph({4, 3});
  for (const auto& T : g.triangulations) {
    Presentation P = relations_from_quiver(quiver_from_triangulation(T), Variant::braid);
    for (const auto& rel : P.relators) CHECK(rel.lhs.size() == rel.rhs.size());
  }
}

TEST_CASE("abelianization examples") {
  Presentation free;
  free.generators = {"a", "b", "c"};
  CHECK(abelianization(free) == Abelianization{3, {}});

  for (int n : {3, 4})
    for (int d : {2, 3, 4, 5}) {
      FlipGraph g = enumerate_flip_graph({n, d});
      for (const auto& T : g.triangulations) {
        auto Q = quiver_from_triangulation(T);
        CHECK(abelianization(relations_from_quiver(Q, Variant::braid)) ==
              Abelianization{1, {}});
        CHECK(abelianization(relations_from_quiver(Q, Variant::reflection)) ==
              Abelianization{0, {2}});
      }
    }
}

TEST_CASE("text exports") {
  Presentation P = relations_from_quiver(quiver_from_triangulation(initial_triangulation({2, 3})),
                                         Variant::braid);
  CHECK(to_text(P) == "gens: s1 s2\nrel: s2 s1 s2 = s1 s2 s1\n");
  CHECK(to_algebra_text(P) ==
        "F := FreeGroup(2);\nrels := [\n  F.2*F.1*F.2*F.1^-1*F.2^-1*F.1^-1\n];\n");
}
