#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Tagged arcs on a disk with n marked boundary points and one interior cone
// point of degree d. Boundary points carry the fixed counterclockwise
// labelling 0..n-1.
namespace orbipres {

struct ConeDisk {
  int n = 0;  // boundary marked points
  int d = 0;  // cone point degree

  void validate() const {
    if (n < 2) throw std::invalid_argument("ConeDisk: need n >= 2");
    if (d < 2) throw std::invalid_argument("ConeDisk: need d >= 2");
  }
  friend bool operator==(const ConeDisk&, const ConeDisk&) = default;
};

enum class Tag : uint8_t { plain = 0, notched = 1 };

inline Tag flipped(Tag t) { return t == Tag::plain ? Tag::notched : Tag::plain; }

// A chord runs between two boundary points; the ccw open interval
// (from, to) is the side not containing the cone point. A radius joins a
// boundary point to the cone point and carries a tag.
struct TaggedArc {
  enum class Kind : uint8_t { chord = 0, radius = 1 };

  Kind kind = Kind::chord;
  int a = 0;               // chord: from; radius: boundary endpoint
  int b = 0;               // chord: to; unused for radii
  Tag tag = Tag::plain;    // radii only

  static TaggedArc Chord(int from, int to) {
    TaggedArc r;
    r.kind = Kind::chord;
    r.a = from;
    r.b = to;
    return r;
  }
  static TaggedArc Radius(int at, Tag tag) {
    TaggedArc r;
    r.kind = Kind::radius;
    r.a = at;
    r.b = -1;
    r.tag = tag;
    return r;
  }

  bool is_radius() const { return kind == Kind::radius; }
  bool is_chord() const { return kind == Kind::chord; }

  void validate(const ConeDisk& disk) const;

  friend auto operator<=>(const TaggedArc&, const TaggedArc&) = default;
};

std::string to_string(const TaggedArc& arc);

// Lift of an arc to the double cover, a regular 2n-gon. A chord with ccw
// span L lifts to the chords (a, a+L) and (a+n, a+L+n); a radius lifts to
// the tag-coloured diameter (a, a+n).
struct ArcLift {
  // chords as vertex pairs mod 2n; for radii lo/hi are (a, a+n)
  struct Seg {
    int u, v;
  };
  std::vector<Seg> segs;
  bool diameter = false;
  Tag colour = Tag::plain;
};

ArcLift lift(const TaggedArc& arc, const ConeDisk& disk);

// True iff {x,y} can coexist in a tagged triangulation (symmetric,
// reflexive). Decided on the double cover: no pair of lifts crosses, where
// same-coloured diameters never cross and opposite-coloured diameters cross
// unless they share both endpoints.
bool compatible(const TaggedArc& x, const TaggedArc& y, const ConeDisk& disk);

// All arcs valid on the disk: n(n-2) chords plus 2n radii.
std::vector<TaggedArc> all_valid_arcs(const ConeDisk& disk);

// Slot i (0-based internally; slots are 1-based in every external format)
// holds one arc; the slot index doubles as quiver vertex and generator id.
struct TaggedTriangulation {
  ConeDisk disk;
  std::vector<TaggedArc> arcs;

  // checks arc validity, pairwise compatibility, the cone-valence pattern
  // and maximality
  void validate() const;

  int n() const { return disk.n; }
  int d() const { return disk.d; }

  // slots of the radii, ascending
  std::vector<int> radius_slots() const;
  // two radii at the same vertex with opposite tags
  bool has_tagged_pair() const;

  TaggedTriangulation with_global_tag_flip() const;

  // canonical identity: the arc multiset
  std::vector<TaggedArc> sorted_arcs() const;

  friend bool operator==(const TaggedTriangulation& p, const TaggedTriangulation& q) {
    return p.disk == q.disk && p.arcs == q.arcs;
  }
};

}  // namespace orbipres
