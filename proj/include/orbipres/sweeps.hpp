#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbipres/braidgraph.hpp"
#include "orbipres/quiver.hpp"
#include "orbipres/surface.hpp"

// Bulk verification kernels. Each has a serial reference and an
// OpenMP-parallel twin over the triangulation list; the two must agree
// exactly and the benchmark target compares them.
namespace orbipres {

struct SweepResult {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
};

// flip <-> mutation compatibility: mutate(Q_T, k) == Q_{flip_k(T)} for all k
SweepResult verify_mutation_serial(const std::vector<TaggedTriangulation>& ts);
SweepResult verify_mutation_parallel(const std::vector<TaggedTriangulation>& ts);

// seeded random flip walks; each step checks one flip against one mutation
SweepResult verify_mutation_walks(const ConeDisk& disk, int walks, int steps, uint64_t seed);

// reflection certificates with the default labelling
SweepResult verify_nu_serial(const std::vector<TaggedTriangulation>& ts);
SweepResult verify_nu_parallel(const std::vector<TaggedTriangulation>& ts);

}  // namespace orbipres
