#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbipres/quiver.hpp"
#include "orbipres/surface.hpp"

using namespace orbipres;

namespace {

DecoratedQuiver bmr_quiver(int n, int d) {
  DecoratedQuiver Q;
  Q.n = n;
  Q.d = d;
  Q.arrows.insert({0, 2});
  Q.arrows.insert({1, 2});
  for (int j = 3; j < n; ++j) Q.arrows.insert({j - 1, j});
  Q.d_edge = DEdge{{0, 1}, {1, 0}};
  Q.double_edges = {2};
  return Q;
}

}  // namespace

TEST_CASE("quiver of the initial triangulation matches the reference quiver") {
  // n = 3: arrows 1->3, 2->3, d-edge {1,2} ordered (2,1), double edge at 3
  DecoratedQuiver q3 = quiver_from_triangulation(initial_triangulation({3, 3}));
  CHECK(q3.arrows == std::set<std::pair<int, int>>{{0, 2}, {1, 2}});
  REQUIRE(q3.d_edge.has_value());
  CHECK(q3.d_edge->pair == std::array<int, 2>{0, 1});
  CHECK(q3.d_edge->ordered == std::array<int, 2>{1, 0});
  CHECK(q3.double_edges == std::set<int>{2});
  CHECK_FALSE(q3.labeled_cycle.has_value());

  for (int n : {3, 4, 5})
    for (int d : {2, 3}) {
      DecoratedQuiver q = quiver_from_triangulation(initial_triangulation({n, d}));
      CHECK(q == bmr_quiver(n, d));
    }

  // n = 2: just the d-edge
  DecoratedQuiver q2 = quiver_from_triangulation(initial_triangulation({2, 5}));
  CHECK(q2.arrows.empty());
  REQUIRE(q2.d_edge.has_value());
  CHECK(q2.double_edges.empty());
}

TEST_CASE("quiver of the one-step flips of T0, n=3") {
  TaggedTriangulation t0 = initial_triangulation({3, 3});

  // flip at slot 1: {R(0,n), R(1,n), C(1,0)} -> arrows {3->1, 2->3}
  DecoratedQuiver qa = quiver_from_triangulation(flip(t0, 0));
  CHECK(qa.arrows == std::set<std::pair<int, int>>{{2, 0}, {1, 2}});
  REQUIRE(qa.d_edge.has_value());
  CHECK(qa.d_edge->pair == std::array<int, 2>{0, 1});
  CHECK(qa.double_edges == std::set<int>{2});

  // flip at slot 3 -> arrows {3->1, 3->2}
  DecoratedQuiver qb = quiver_from_triangulation(flip(t0, 2));
  CHECK(qb.arrows == std::set<std::pair<int, int>>{{2, 0}, {2, 1}});
  CHECK(qb.double_edges == std::set<int>{2});
}

TEST_CASE("all-radii triangulation carries the labeled cycle") {
  TaggedTriangulation T;
  T.disk = {3, 4};
  T.arcs = {TaggedArc::Radius(0, Tag::plain), TaggedArc::Radius(1, Tag::plain),
            TaggedArc::Radius(2, Tag::plain)};
  T.validate();
  DecoratedQuiver Q = quiver_from_triangulation(T);
  REQUIRE(Q.labeled_cycle.has_value());
  CHECK(Q.labeled_cycle->size() == 3);
  CHECK_FALSE(Q.d_edge.has_value());
  CHECK(Q.double_edges.empty());
}

TEST_CASE("mutation rule: spec instances") {
  TaggedTriangulation t0 = initial_triangulation({3, 3});
  DecoratedQuiver Q = quiver_from_triangulation(t0);

  DecoratedQuiver m3 = mutate(Q, 2);
  CHECK(m3.arrows == std::set<std::pair<int, int>>{{2, 0}, {2, 1}});
  REQUIRE(m3.d_edge.has_value());
  CHECK(m3.d_edge->pair == std::array<int, 2>{0, 1});
  CHECK(m3.double_edges == std::set<int>{2});

  // labelled 3-cycle 1->2->3->1, mutate at 2: d-edge {3,1}, label gone,
  // neighbours of 3 and 1 acquire double edges
  DecoratedQuiver L;
  L.n = 3;
  L.d = 3;
  L.arrows = {{0, 1}, {1, 2}, {2, 0}};
  L.labeled_cycle = std::vector<int>{0, 1, 2};
  L.validate();
  DecoratedQuiver M = mutate(L, 1);
  CHECK(M.arrows == std::set<std::pair<int, int>>{{1, 0}, {2, 1}});
  REQUIRE(M.d_edge.has_value());
  CHECK(M.d_edge->pair == std::array<int, 2>{0, 2});
  CHECK(M.double_edges == std::set<int>{1});
  CHECK_FALSE(M.labeled_cycle.has_value());
  CHECK(mutate(M, 1) == L);
}

TEST_CASE("master cross-check: mutation equals flip-then-reconstruct") {
  for (int n : {2, 3, 4})
    for (int d : {2, 3, 4, 5}) {
      FlipGraph g = enumerate_flip_graph({n, d});
      for (const auto& T : g.triangulations) {
        DecoratedQuiver Q = quiver_from_triangulation(T);
        for (int k = 0; k < n; ++k) {
          DecoratedQuiver rule = mutate(Q, k);
          DecoratedQuiver ref = quiver_from_triangulation(flip(T, k));
          if (!(rule == ref)) {
            CAPTURE(n);
            CAPTURE(d);
            CAPTURE(k);
          }
          REQUIRE(rule == ref);
        }
      }
    }
}

TEST_CASE("mutation is an involution") {
  FlipGraph g = enumerate_flip_graph({4, 3});
  for (const auto& T : g.triangulations) {
    DecoratedQuiver Q = quiver_from_triangulation(T);
    for (int k = 0; k < 4; ++k) CHECK(mutate(mutate(Q, k), k) == Q);
  }
}

TEST_CASE("tag flip leaves the quiver unchanged") {
  for (int n : {2, 3, 4}) {
    FlipGraph g = enumerate_flip_graph({n, 3});
    for (const auto& T : g.triangulations)
      CHECK(quiver_from_triangulation(T.with_global_tag_flip()) == quiver_from_triangulation(T));
  }
}

TEST_CASE("d=2 strips to Fomin-Zelevinsky mutation") {
  FlipGraph g = enumerate_flip_graph({4, 2});
  for (const auto& T : g.triangulations) {
    DecoratedQuiver Q = quiver_from_triangulation(T);
    for (int k = 0; k < 4; ++k)
      CHECK(mutate(Q, k).arrows == fz_mutate(Q.arrows, k));
  }
}
