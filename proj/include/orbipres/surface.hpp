#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "orbipres/arcs.hpp"
#include "orbipres/errors.hpp"

namespace orbipres {

// The triangulation carrying the reference presentation: both tagged radii
// at vertex 0, the chord cutting them off, then a fan of chords from 0.
TaggedTriangulation initial_triangulation(const ConeDisk& disk);

// Replaces slot k (0-based) by the unique other arc completing the rest.
// Aborts with std::logic_error when the completion count is not two.
TaggedTriangulation flip(const TaggedTriangulation& T, int k);

struct FlipGraph {
  // triangulations keyed by sorted arc set; the slot-labelled
  // representative is the one first reached from T0
  std::vector<TaggedTriangulation> triangulations;
  std::set<std::pair<int, int>> edges;  // indices into triangulations, i < j
};

// BFS closure of the initial triangulation under flips. Throws
// ResourceError once more than `cap` triangulations appear.
FlipGraph enumerate_flip_graph(const ConeDisk& disk, std::size_t cap = 1u << 20);

// Independent oracle: every maximal pairwise-compatible arc set, by brute
// force over all n-subsets of valid arcs.
std::vector<std::vector<TaggedArc>> maximal_compatible_sets(const ConeDisk& disk);

}  // namespace orbipres
