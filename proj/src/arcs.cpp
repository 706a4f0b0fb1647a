#include "orbipres/arcs.hpp"

#include <algorithm>

namespace orbipres {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

// strictly inside the ccw open interval (a, b) on Z/m
bool in_open_ccw(int x, int a, int b, int m) {
  if (a == b) return false;
  int len = mod(b - a, m);
  int off = mod(x - a, m);
  return off > 0 && off < len;
}

// chords of the 2n-gon cross iff their endpoints strictly interleave
bool segs_cross(const ArcLift::Seg& p, const ArcLift::Seg& q, int m) {
  if (p.u == q.u || p.u == q.v || p.v == q.u || p.v == q.v) return false;
  bool qu = in_open_ccw(q.u, p.u, p.v, m);
  bool qv = in_open_ccw(q.v, p.u, p.v, m);
  return qu != qv;
}

}  // namespace

void TaggedArc::validate(const ConeDisk& disk) const {
  disk.validate();
  const int n = disk.n;
  if (kind == Kind::radius) {
    if (a < 0 || a >= n) throw std::invalid_argument("radius endpoint out of range");
    return;
  }
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("chord endpoint out of range");
  if (a == b) throw std::invalid_argument("chord endpoints coincide");
  // a ccw-empty interval means the arc is isotopic to a boundary segment
  int span = (b - a + n) % n;
  if (span == 1) throw std::invalid_argument("chord isotopic to boundary segment");
}

std::string to_string(const TaggedArc& arc) {
  if (arc.is_radius())
    return "R(" + std::to_string(arc.a) + (arc.tag == Tag::plain ? ",plain)" : ",notched)");
  return "C(" + std::to_string(arc.a) + "," + std::to_string(arc.b) + ")";
}

ArcLift lift(const TaggedArc& arc, const ConeDisk& disk) {
  const int n = disk.n;
  ArcLift out;
  if (arc.is_radius()) {
    out.diameter = true;
    out.colour = arc.tag;
    out.segs.push_back({arc.a, arc.a + n});
    return out;
  }
  int span = (arc.b - arc.a + n) % n;
  out.segs.push_back({arc.a, mod(arc.a + span, 2 * n)});
  out.segs.push_back({arc.a + n, mod(arc.a + span + n, 2 * n)});
  return out;
}

bool compatible(const TaggedArc& x, const TaggedArc& y, const ConeDisk& disk) {
  x.validate(disk);
  y.validate(disk);
  if (x == y) return true;
  const int m = 2 * disk.n;
  ArcLift lx = lift(x, disk);
  ArcLift ly = lift(y, disk);
  if (lx.diameter && ly.diameter) {
    if (lx.colour == ly.colour) return x.a != y.a;  // same arc excluded above
    // opposite tags coexist only at a shared endpoint
    return x.a == y.a;
  }
  for (const auto& p : lx.segs)
    for (const auto& q : ly.segs)
      if (segs_cross(p, q, m)) return false;
  return true;
}

std::vector<TaggedArc> all_valid_arcs(const ConeDisk& disk) {
  disk.validate();
  std::vector<TaggedArc> out;
  const int n = disk.n;
  for (int a = 0; a < n; ++a) {
    out.push_back(TaggedArc::Radius(a, Tag::plain));
    out.push_back(TaggedArc::Radius(a, Tag::notched));
    for (int b = 0; b < n; ++b) {
      if (a == b || (b - a + n) % n == 1) continue;
      out.push_back(TaggedArc::Chord(a, b));
    }
  }
  return out;
}

std::vector<int> TaggedTriangulation::radius_slots() const {
  std::vector<int> out;
  for (int i = 0; i < (int)arcs.size(); ++i)
    if (arcs[i].is_radius()) out.push_back(i);
  return out;
}

bool TaggedTriangulation::has_tagged_pair() const {
  auto rs = radius_slots();
  return rs.size() == 2 && arcs[rs[0]].a == arcs[rs[1]].a &&
         arcs[rs[0]].tag != arcs[rs[1]].tag;
}

TaggedTriangulation TaggedTriangulation::with_global_tag_flip() const {
  TaggedTriangulation out = *this;
  for (auto& arc : out.arcs)
    if (arc.is_radius()) arc.tag = flipped(arc.tag);
  return out;
}

std::vector<TaggedArc> TaggedTriangulation::sorted_arcs() const {
  auto out = arcs;
  std::sort(out.begin(), out.end());
  return out;
}

void TaggedTriangulation::validate() const {
  disk.validate();
  if ((int)arcs.size() != disk.n)
    throw std::invalid_argument("triangulation needs exactly n arcs");
  for (const auto& arc : arcs) arc.validate(disk);
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[i] == arcs[j]) throw std::invalid_argument("duplicate arc");
      if (!compatible(arcs[i], arcs[j], disk))
        throw std::invalid_argument("incompatible arcs " + to_string(arcs[i]) + " vs " +
                                    to_string(arcs[j]));
    }
  // cone valence: at least two radii; opposite tags force a shared endpoint
  // and exclude further radii, otherwise all tags agree
  auto rs = radius_slots();
  if (rs.size() < 2) throw std::invalid_argument("fewer than two arcs at the cone point");
  bool tags_differ = false;
  for (size_t i = 1; i < rs.size(); ++i)
    if (arcs[rs[i]].tag != arcs[rs[0]].tag) tags_differ = true;
  if (tags_differ) {
    if (rs.size() != 2 || arcs[rs[0]].a != arcs[rs[1]].a)
      throw std::invalid_argument("mixed tags only allowed for a pair at one vertex");
  } else {
    for (size_t i = 1; i < rs.size(); ++i)
      if (arcs[rs[i]].a == arcs[rs[0]].a)
        throw std::invalid_argument("same-tag radii must have distinct endpoints");
  }
  // maximality
  for (const auto& cand : all_valid_arcs(disk)) {
    if (std::find(arcs.begin(), arcs.end(), cand) != arcs.end()) continue;
    bool ok = true;
    for (const auto& arc : arcs)
      if (!compatible(cand, arc, disk)) {
        ok = false;
        break;
      }
    if (ok)
      throw std::invalid_argument("arc set not maximal: " + to_string(cand) +
                                  " is still compatible");
  }
}

}  // namespace orbipres
