#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orbipres/arcs.hpp"
#include "orbipres/monomial.hpp"
#include "orbipres/regions.hpp"

namespace orbipres {

// Dual graph of a tagged triangulation: one vertex per complement region
// (numbered like RegionDecomposition, 1-based externally), one edge per arc
// slot. Unicyclic: trees hang off a unique cycle.
struct BraidGraph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;  // per slot, incident regions ascending
  std::vector<int> cycle_vertices;        // the unique cycle in traversal order
  std::vector<int> cycle_edges;           // slot of the edge cycle_vertices[m] -> [m+1]
};

BraidGraph braid_graph(const TaggedTriangulation& T);
BraidGraph braid_graph(const TaggedTriangulation& T, const RegionDecomposition& rd);

// s(a,b;c) per dual edge; the labels along the oriented cycle must sum to
// a value coprime with d.
struct ReflectionAssignment {
  std::vector<std::array<int, 2>> directed;  // per slot, 1-based region pair (a,b)
  std::vector<int> labels;                   // c per slot
  int delta = 0;                             // |sum of labels around the cycle|

  MonomialElement reflection(int slot, int n, int d) const;
};

// Default labelling: c = 0 everywhere except the smallest cycle slot, which
// gets c = 1. Supplied labels failing gcd(delta, d) = 1 are rejected.
ReflectionAssignment reflection_assignment(const TaggedTriangulation& T, const BraidGraph& g,
                                           const std::optional<std::map<int, int>>& labels = {});

struct NuCertificate {
  bool relators_ok = false;
  int failing_relator = -1;  // index into the reflection presentation
  std::size_t image_order = 0;
  std::size_t presented_order = 0;
  std::size_t expected_order = 0;  // d^{n-1} n!
  bool pass() const {
    return relators_ok && image_order == expected_order && presented_order == expected_order;
  }
};

// Certifies that sending each generator to its dual-edge reflection is an
// isomorphism onto G(d,d,n): every relator dies, and image order, coset
// enumeration order and d^{n-1} n! agree.
NuCertificate verify_nu(const TaggedTriangulation& T, const ReflectionAssignment& assignment,
                        std::size_t cap = 1u << 20);

std::size_t gddn_order(int d, int n);

}  // namespace orbipres
