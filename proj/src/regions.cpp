#include "orbipres/regions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbipres {

namespace {

struct Edge {
  int x, y;        // map nodes; boundary 0..2n-1, centre = 2n
  bool is_arc;     // false: boundary segment
  int slot;        // arc slot, or boundary segment index upstairs
};

struct PlanarMap {
  int m;                               // 2n
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot;   // per node, edge ids in ccw order
  std::vector<std::array<int, 2>> pos; // per edge, index within rot[x], rot[y]

  int other(int e, int node) const { return edges[e].x == node ? edges[e].y : edges[e].x; }
};

int mod(int x, int m) { return ((x % m) + m) % m; }

PlanarMap build_map(const TaggedTriangulation& T) {
  const int n = T.n();
  const int m = 2 * n;
  const int centre = m;
  PlanarMap pm;
  pm.m = m;

  for (int v = 0; v < m; ++v) pm.edges.push_back({v, mod(v + 1, m), false, v});

  // key of an interior edge-end at boundary node v, ascending = ccw sweep
  // from the (v,v+1) segment; parallel diameters are ordered notched first
  struct End {
    long key;
    int edge;
  };
  std::vector<std::vector<End>> ends(m + 1);

  for (int s = 0; s < (int)T.arcs.size(); ++s) {
    const TaggedArc& arc = T.arcs[s];
    ArcLift lf = lift(arc, T.disk);
    if (lf.diameter) {
      for (int copy = 0; copy < 2; ++copy) {
        int v = mod(arc.a + copy * n, m);
        int e = (int)pm.edges.size();
        pm.edges.push_back({v, centre, true, s});
        long tagbit = arc.tag == Tag::notched ? 0 : 1;
        ends[v].push_back({4L * n + tagbit, e});
        ends[centre].push_back({2L * v + (arc.tag == Tag::plain ? 0 : 1), e});
      }
    } else {
      for (const auto& seg : lf.segs) {
        int e = (int)pm.edges.size();
        pm.edges.push_back({seg.u, seg.v, true, s});
        ends[seg.u].push_back({4L * mod(seg.v - seg.u, m) + 2, e});
        ends[seg.v].push_back({4L * mod(seg.u - seg.v, m) + 2, e});
      }
    }
  }

  pm.rot.assign(m + 1, {});
  for (int v = 0; v < m; ++v) {
    pm.rot[v].push_back(v);  // segment (v, v+1)
    std::sort(ends[v].begin(), ends[v].end(),
              [](const End& a, const End& b) { return a.key < b.key; });
    for (const auto& end : ends[v]) pm.rot[v].push_back(end.edge);
    pm.rot[v].push_back(mod(v - 1, m));  // segment (v-1, v)
  }
  std::sort(ends[centre].begin(), ends[centre].end(),
            [](const End& a, const End& b) { return a.key < b.key; });
  for (const auto& end : ends[centre]) pm.rot[centre].push_back(end.edge);

  pm.pos.assign(pm.edges.size(), {-1, -1});
  for (int node = 0; node <= m; ++node)
    for (int i = 0; i < (int)pm.rot[node].size(); ++i) {
      int e = pm.rot[node][i];
      pm.pos[e][pm.edges[e].x == node ? 0 : 1] = i;
    }
  return pm;
}

// faces traced with the interior on the left; orbits of directed edges
struct Face {
  std::vector<std::pair<int, int>> walk;  // (edge, entered-at-node)
};

std::vector<Face> trace_faces(const PlanarMap& pm) {
  // directed edge id: 2*e + dir, dir 0 means x->y
  std::vector<char> seen(2 * pm.edges.size(), 0);
  std::vector<Face> faces;
  for (int de = 0; de < (int)seen.size(); ++de) {
    if (seen[de]) continue;
    Face f;
    int cur = de;
    while (!seen[cur]) {
      seen[cur] = 1;
      int e = cur / 2, dir = cur % 2;
      int head = dir == 0 ? pm.edges[e].y : pm.edges[e].x;
      f.walk.push_back({e, head});
      int p = pm.pos[e][pm.edges[e].x == head ? 0 : 1];
      const auto& r = pm.rot[head];
      int e2 = r[mod(p - 1, (int)r.size())];
      cur = 2 * e2 + (pm.edges[e2].x == head ? 0 : 1);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

RegionDecomposition regions_of(const TaggedTriangulation& T) {
  const int n = T.n();
  const int m = 2 * n;
  PlanarMap pm = build_map(T);
  std::vector<Face> faces = trace_faces(pm);

  // the face consisting of boundary segments alone is the outside
  int outer = -1;
  for (int i = 0; i < (int)faces.size(); ++i) {
    bool all_bseg = true;
    for (auto [e, at] : faces[i].walk)
      if (pm.edges[e].is_arc) all_bseg = false;
    if (all_bseg && faces[i].walk.size() == (size_t)m) {
      outer = i;
      break;
    }
  }
  if (outer < 0) throw std::logic_error("regions: outer face not found");

  // deck rotation v -> v+n pairs interior faces; identify orbits by the
  // multiset of directed edges under sigma
  auto sigma_edge = [&](int e) {
    const Edge& ed = pm.edges[e];
    if (!ed.is_arc) {
      for (int e2 = 0; e2 < m; ++e2)
        if (pm.edges[e2].slot == mod(ed.slot + n, m)) return e2;
    }
    for (int e2 = m; e2 < (int)pm.edges.size(); ++e2) {
      const Edge& f = pm.edges[e2];
      if (e2 != e && f.is_arc && f.slot == ed.slot &&
          mod(f.x, m) == mod(ed.x + n, m) &&
          (f.y == ed.y || mod(f.y, m) == mod(ed.y + n, m)))
        return e2;
    }
    throw std::logic_error("regions: deck image of edge not found");
  };

  std::map<std::vector<int>, int> face_key;  // sorted directed-edge list -> face
  auto key_of = [&](const Face& f) {
    std::vector<int> k;
    for (auto [e, at] : f.walk) k.push_back(2 * e + (pm.edges[e].y == at ? 0 : 1));
    std::sort(k.begin(), k.end());
    return k;
  };
  for (int i = 0; i < (int)faces.size(); ++i)
    if (i != outer) face_key[key_of(faces[i])] = i;

  std::vector<char> used(faces.size(), 0);
  RegionDecomposition out;
  for (int i = 0; i < (int)faces.size(); ++i) {
    if (i == outer || used[i]) continue;
    std::vector<int> img;
    for (auto [e, at] : faces[i].walk) {
      int e2 = sigma_edge(e);
      int at2 = at == m ? m : mod(at + n, m);
      img.push_back(2 * e2 + (pm.edges[e2].y == at2 ? 0 : 1));
    }
    std::sort(img.begin(), img.end());
    auto it = face_key.find(img);
    if (it == face_key.end()) throw std::logic_error("regions: deck image face missing");
    int j = it->second;
    if (j == i) throw std::logic_error("regions: deck-invariant face");
    used[i] = used[j] = 1;

    Region reg;
    for (auto [e, at] : faces[i].walk) {
      const Edge& ed = pm.edges[e];
      if (ed.is_arc)
        reg.walk.push_back({true, ed.slot});
      else
        reg.walk.push_back({false, mod(ed.slot, n)});
    }
    for (const auto& side : reg.walk)
      if (side.is_arc) {
        reg.arc_slots.push_back(side.idx);
        if (T.arcs[side.idx].is_radius()) reg.touches_cone = true;
      }
    std::sort(reg.arc_slots.begin(), reg.arc_slots.end());
    reg.arc_slots.erase(std::unique(reg.arc_slots.begin(), reg.arc_slots.end()),
                        reg.arc_slots.end());
    out.regions.push_back(std::move(reg));
  }

  if ((int)out.regions.size() != n)
    throw std::logic_error("regions: expected n regions, found " +
                           std::to_string(out.regions.size()));

  std::sort(out.regions.begin(), out.regions.end(),
            [](const Region& a, const Region& b) { return a.arc_slots < b.arc_slots; });

  std::vector<std::vector<int>> incident(n);
  for (int r = 0; r < n; ++r)
    for (const auto& side : out.regions[r].walk)
      if (side.is_arc) incident[side.idx].push_back(r);
  out.arc_regions.assign(n, {-1, -1});
  for (int s = 0; s < n; ++s) {
    if (incident[s].size() != 2 || incident[s][0] == incident[s][1])
      throw std::logic_error("regions: arc must separate two distinct regions");
    std::sort(incident[s].begin(), incident[s].end());
    out.arc_regions[s] = {incident[s][0], incident[s][1]};
  }
  return out;
}

}  // namespace orbipres
