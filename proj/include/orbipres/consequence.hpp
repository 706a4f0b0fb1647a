#pragma once

#include "orbipres/present.hpp"
#include "orbipres/words.hpp"

namespace orbipres {

enum class ConsequenceResult { proved, unknown };

// Breadth-first search from lhs toward rhs, rewriting with each relation of
// P as a two-sided rule at every position (both orientations and their
// inverses) plus free cancellation. "proved" is sound; "unknown" carries no
// refutation. Exhausting depth or the state cap returns unknown.
ConsequenceResult bounded_consequence(const Presentation& P, const Word& lhs, const Word& rhs,
                                      int depth_budget, std::size_t state_cap = 1u << 18);

}  // namespace orbipres
