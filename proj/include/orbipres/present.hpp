#pragma once

#include <string>
#include <vector>

#include "orbipres/quiver.hpp"
#include "orbipres/words.hpp"

namespace orbipres {

// relators are kept as equations; algorithms use the reduced word lhs*rhs^-1
struct Relator {
  Word lhs;
  Word rhs;
  Word word() const { return concat(lhs, inverse(rhs)); }
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  std::string source;

  void validate() const;
  std::vector<Word> relator_words() const;
};

enum class Variant { braid, reflection, no_cycle };

// Relation families read off a decorated quiver: commutations, braid
// relations, plain 3-cycle relations, the alternating d-edge relation,
// labelled-cycle relations, double-edge relations and the 4-cycle-with-
// diagonal relations. The reflection variant adds s_i^2; no_cycle omits the
// labelled-cycle family.
Presentation relations_from_quiver(const DecoratedQuiver& Q, Variant variant);

enum class Reference { bmr_braid, artin_b_mod_sd };

Presentation reference_presentation(int d, int n, Reference which);

// generator words of the index-d subgroup N = <s t2 s^-1, t2, ..., tn>
std::vector<Word> n_subgroup_generators(const Presentation& artin_b);

std::string to_text(const Presentation& P);
// plain text for computational-algebra systems:
//   F := FreeGroup(k);
//   rels := [ F.1*F.2^-1, ... ];
std::string to_algebra_text(const Presentation& P);

}  // namespace orbipres
