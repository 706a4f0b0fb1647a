#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "orbipres/arcs.hpp"
#include "orbipres/regions.hpp"

namespace orbipres {

// Unoriented edge labelled d between the two cone-incident slots. `ordered`
// fixes the letter order (i, j) used by the double-edge relation; the two
// endpoints are structurally interchangeable, so the canonical order is
// (larger slot, smaller slot).
struct DEdge {
  std::array<int, 2> pair;     // ascending
  std::array<int, 2> ordered;  // (i, j) of the relation
  friend bool operator==(const DEdge&, const DEdge&) = default;
};

struct DecoratedQuiver {
  int n = 0;
  int d = 0;
  std::set<std::pair<int, int>> arrows;  // 0-based slots
  std::optional<DEdge> d_edge;
  std::set<int> double_edges;
  std::optional<std::vector<int>> labeled_cycle;  // arrow order, min slot first

  bool has_arrow(int i, int j) const { return arrows.count({i, j}) > 0; }
  void validate() const;

  friend bool operator==(const DecoratedQuiver&, const DecoratedQuiver&) = default;
};

DecoratedQuiver quiver_from_triangulation(const TaggedTriangulation& T);
DecoratedQuiver quiver_from_triangulation(const TaggedTriangulation& T,
                                          const RegionDecomposition& regions);

// Rule-based mutation at vertex k. The reference semantics is
// flip-then-reconstruct; the equality of the two is a standing test.
DecoratedQuiver mutate(const DecoratedQuiver& Q, int k);

// Fomin-Zelevinsky mutation of the bare arrow set, for the d=2 check.
std::set<std::pair<int, int>> fz_mutate(const std::set<std::pair<int, int>>& arrows, int k);

}  // namespace orbipres
