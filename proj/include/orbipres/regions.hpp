#pragma once

#include <array>
#include <vector>

#include "orbipres/arcs.hpp"

// Complement regions of a tagged triangulation, computed on the double
// cover: arcs lift to chords and coloured diameters of a regular 2n-gon,
// opposite-tag radii at one vertex lift to a parallel pair bounding a thin
// lens. Faces of that planar map, taken modulo the deck rotation v -> v+n,
// are the regions downstairs. Every boundary walk is counterclockwise.
namespace orbipres {

struct RegionSide {
  bool is_arc = false;
  int idx = 0;  // arc slot, or boundary segment (idx, idx+1 mod n)
  friend bool operator==(const RegionSide&, const RegionSide&) = default;
};

struct Region {
  std::vector<RegionSide> walk;  // ccw cyclic
  std::vector<int> arc_slots;    // sorted, without multiplicity
  bool touches_cone = false;     // some side is a radius
};

struct RegionDecomposition {
  std::vector<Region> regions;  // sorted by arc_slots, lexicographically
  // the two regions each arc separates, ascending
  std::vector<std::array<int, 2>> arc_regions;
};

RegionDecomposition regions_of(const TaggedTriangulation& T);

}  // namespace orbipres
