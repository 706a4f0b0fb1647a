#include "orbipres/phi.hpp"

#include <stdexcept>

namespace orbipres {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

// does the open ccw sector (v, w) of the 2n-gon meet any lift of the
// staying arcs (arcs crossing the sector block the sweep)
bool sector_clear(const TaggedTriangulation& T, int skip, int v, int w) {
  const int m = 2 * T.n();
  auto inside = [&](int x) {
    int len = mod(w - v, m);
    int off = mod(x - v, m);
    return off > 0 && off < len;
  };
  for (int s = 0; s < (int)T.arcs.size(); ++s) {
    if (s == skip) continue;
    ArcLift lf = lift(T.arcs[s], T.disk);
    if (lf.diameter) {
      int u = T.arcs[s].a;
      if (inside(u) || inside(u + T.n())) return false;
    } else {
      for (const auto& seg : lf.segs)
        if (inside(seg.u) != inside(seg.v)) return false;
    }
  }
  return true;
}

}  // namespace

bool flip_rotates_anticlockwise(const TaggedTriangulation& T, int k) {
  if (!T.arcs[k].is_radius())
    throw std::invalid_argument("rotation predicate needs a radius slot");
  TaggedTriangulation T2 = flip(T, k);
  if (!T2.arcs[k].is_radius())
    throw std::logic_error("flip of a radius must stay a radius");
  const int n = T.n(), m = 2 * n;
  int v = T.arcs[k].a, w = T2.arcs[k].a;
  // the diameter stops at whichever lift of w its sweeping end meets first
  int w_ccw = mod(w - v, m) <= mod(w + n - v, m) ? w : w + n;
  int w_cw = mod(v - w, m) <= mod(v - w - n, m) ? w : mod(w + n, m);
  bool ccw = sector_clear(T, k, v, w_ccw);
  bool cw = sector_clear(T, k, w_cw, v);
  if (ccw && cw) {
    // the parallel-pair configurations are symmetric under the half twist
    // exchanging the two radii, so both sweeps are unobstructed; the tag
    // breaks the tie, and since a flip toggles the tag, a flip and its
    // reverse still rotate in opposite directions
    return T.arcs[k].tag == Tag::plain;
  }
  if (!ccw && !cw) throw std::logic_error("rotation direction is not determined");
  return ccw;
}

GeneratorMap phi_map(const TaggedTriangulation& T, int k) {
  DecoratedQuiver Q = quiver_from_triangulation(T);
  GeneratorMap out;
  std::vector<bool> conjugated(Q.n, false);
  for (auto [i, j] : Q.arrows)
    if (j == k) conjugated[i] = true;
  if (Q.d_edge) {
    auto pr = Q.d_edge->pair;
    if (pr[0] == k || pr[1] == k) {
      int partner = pr[0] == k ? pr[1] : pr[0];
      if (flip_rotates_anticlockwise(T, k)) conjugated[partner] = true;
    }
  }
  for (int i = 0; i < Q.n; ++i) {
    if (i != k && conjugated[i])
      out.images[i] = reduced({{k, 1}, {i, 1}, {k, -1}});
    else
      out.images[i] = {{i, 1}};
  }
  return out;
}

}  // namespace orbipres
