#pragma once

#include "orbipres/quiver.hpp"
#include "orbipres/surface.hpp"
#include "orbipres/words.hpp"

namespace orbipres {

// Whether the radius in slot k sweeps counterclockwise around the cone
// point when flipped: the swept sector on the double cover is the side free
// of every other lifted arc. Only meaningful when slot k holds a radius.
bool flip_rotates_anticlockwise(const TaggedTriangulation& T, int k);

// Substitution realizing G_{Q_T} -> G_{Q_flip_k(T)}: s_i maps to
// t_k t_i t_k^-1 on the conjugated set (arrows into k, and the d-edge
// partner of k when the flip rotates k anticlockwise), identity rename
// elsewhere. Generator ids are slots.
GeneratorMap phi_map(const TaggedTriangulation& T, int k);

}  // namespace orbipres
