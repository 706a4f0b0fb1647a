#include "orbipres/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbipres {

namespace {

std::vector<int> normalize_cycle(std::vector<int> cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

}  // namespace

void DecoratedQuiver::validate() const {
  if (d < 2) throw std::invalid_argument("quiver: d < 2");
  for (auto [i, j] : arrows) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("quiver: arrow out of range");
    if (i == j) throw std::invalid_argument("quiver: self arrow");
    if (arrows.count({j, i})) throw std::invalid_argument("quiver: plain 2-cycle");
  }
  if (d_edge && labeled_cycle)
    throw std::invalid_argument("quiver: d-edge and labeled cycle are exclusive");
  if (!d_edge && !labeled_cycle)
    throw std::invalid_argument("quiver: one decoration regime is required");
  if (d_edge) {
    if (d_edge->pair[0] >= d_edge->pair[1]) throw std::invalid_argument("quiver: d-edge pair order");
    if (std::set<int>{d_edge->ordered[0], d_edge->ordered[1]} !=
        std::set<int>{d_edge->pair[0], d_edge->pair[1]})
      throw std::invalid_argument("quiver: d-edge ordered pair mismatch");
  }
  if (!double_edges.empty() && !d_edge)
    throw std::invalid_argument("quiver: double edges without d-edge");
  if (double_edges.size() > 2) throw std::invalid_argument("quiver: more than two double edges");
  if (labeled_cycle) {
    const auto& cyc = *labeled_cycle;
    if (cyc.size() < 3) throw std::invalid_argument("quiver: labeled cycle too short");
    for (size_t m = 0; m < cyc.size(); ++m)
      if (!has_arrow(cyc[m], cyc[(m + 1) % cyc.size()]))
        throw std::invalid_argument("quiver: labeled cycle arrow missing");
  }
}

DecoratedQuiver quiver_from_triangulation(const TaggedTriangulation& T) {
  return quiver_from_triangulation(T, regions_of(T));
}

DecoratedQuiver quiver_from_triangulation(const TaggedTriangulation& T,
                                          const RegionDecomposition& rd) {
  DecoratedQuiver Q;
  Q.n = T.n();
  Q.d = T.d();

  const auto radii = T.radius_slots();
  const bool tagged_pair = T.has_tagged_pair();

  // arrows: walk each region counterclockwise; for cyclically consecutive
  // arc sides (x, then y) emit y -> x. In a region longer than a digon the
  // tagged radii appear as a consecutive run and act as a single side, with
  // arrows copied to both.
  std::set<std::pair<int, int>> raw;
  for (const auto& reg : rd.regions) {
    // sides as arc slots, bsegs as -1; collapse the tagged pair
    struct PSide {
      std::vector<int> slots;  // empty: boundary
    };
    std::vector<PSide> sides;
    const auto& walk = reg.walk;
    const size_t len = walk.size();
    if (tagged_pair && len > 2) {
      std::vector<char> eaten(len, 0);
      for (size_t p = 0; p < len; ++p) {
        const auto& s0 = walk[p];
        const auto& s1 = walk[(p + 1) % len];
        if (s0.is_arc && s1.is_arc && T.arcs[s0.idx].is_radius() &&
            T.arcs[s1.idx].is_radius() && s0.idx != s1.idx) {
          eaten[(p + 1) % len] = 2;  // merged into predecessor
        }
      }
      for (size_t p = 0; p < len; ++p) {
        if (eaten[p] == 2) continue;
        PSide ps;
        if (walk[p].is_arc) {
          ps.slots.push_back(walk[p].idx);
          if (eaten[(p + 1) % len] == 2) ps.slots.push_back(walk[(p + 1) % len].idx);
        }
        sides.push_back(std::move(ps));
      }
    } else {
      for (const auto& s : walk) {
        PSide ps;
        if (s.is_arc) ps.slots.push_back(s.idx);
        sides.push_back(std::move(ps));
      }
    }
    const size_t ns = sides.size();
    for (size_t p = 0; p < ns; ++p) {
      const auto& x = sides[p];
      const auto& y = sides[(p + 1) % ns];
      if (x.slots.empty() || y.slots.empty()) continue;
      for (int a : y.slots)
        for (int b : x.slots)
          if (a != b) raw.insert({a, b});
    }
  }

  // 2-cycles collapse to the unoriented d-labelled edge
  std::optional<std::array<int, 2>> pair;
  for (auto [i, j] : raw) {
    if (i < j && raw.count({j, i})) {
      if (pair) throw std::logic_error("quiver: two 2-cycles");
      pair = {i, j};
    }
  }
  for (auto it = raw.begin(); it != raw.end();) {
    if (pair && ((it->first == (*pair)[0] && it->second == (*pair)[1]) ||
                 (it->first == (*pair)[1] && it->second == (*pair)[0])))
      it = raw.erase(it);
    else
      ++it;
  }
  Q.arrows = std::move(raw);

  if (radii.size() == 2) {
    if (!pair || ((*pair)[0] != radii[0] || (*pair)[1] != radii[1]))
      throw std::logic_error("quiver: d-edge must join the two radius slots");
    Q.d_edge = DEdge{*pair, {(*pair)[1], (*pair)[0]}};
    for (const auto& reg : rd.regions) {
      if (!reg.touches_cone) continue;
      for (int s : reg.arc_slots)
        if (!T.arcs[s].is_radius()) Q.double_edges.insert(s);
    }
  } else {
    if (pair) throw std::logic_error("quiver: unexpected 2-cycle with r >= 3 radii");
    // the radii carry an oriented cycle around the cone point
    std::vector<int> cyc;
    int cur = radii[0];
    do {
      cyc.push_back(cur);
      int next = -1;
      for (int r : radii)
        if (Q.has_arrow(cur, r)) {
          if (next != -1) throw std::logic_error("quiver: branching radius cycle");
          next = r;
        }
      if (next < 0) throw std::logic_error("quiver: radius cycle broken");
      cur = next;
    } while (cur != radii[0] && cyc.size() <= radii.size());
    if (cyc.size() != radii.size()) throw std::logic_error("quiver: radius cycle length");
    Q.labeled_cycle = normalize_cycle(cyc);
  }

  Q.validate();
  return Q;
}

std::set<std::pair<int, int>> fz_mutate(const std::set<std::pair<int, int>>& arrows, int k) {
  std::set<std::pair<int, int>> out;
  std::vector<int> in_k, out_k;
  for (auto [i, j] : arrows) {
    if (j == k)
      in_k.push_back(i);
    else if (i == k)
      out_k.push_back(j);
    else
      out.insert({i, j});
  }
  for (int j : in_k) out.insert({k, j});
  for (int i : out_k) out.insert({i, k});
  for (int j : in_k)
    for (int i : out_k) {
      if (i == j) continue;
      if (out.count({i, j}))
        out.erase({i, j});
      else
        out.insert({j, i});
    }
  return out;
}

DecoratedQuiver mutate(const DecoratedQuiver& Q, int k) {
  Q.validate();
  if (k < 0 || k >= Q.n) throw std::invalid_argument("mutate: bad vertex");

  DecoratedQuiver R = Q;
  std::vector<int> in_k, out_k;
  for (auto [i, j] : Q.arrows) {
    if (j == k) in_k.push_back(i);
    if (i == k) out_k.push_back(j);
  }

  // rule 1: reverse arrows at k
  std::set<std::pair<int, int>> arrows;
  for (auto [i, j] : Q.arrows) {
    if (i == k || j == k)
      arrows.insert({j, i});
    else
      arrows.insert({i, j});
  }

  bool lcyc3_fired = false;
  std::array<int, 2> lcyc3_pair{};
  bool dedge_to_cycle = false;
  std::array<int, 3> new_cycle{};

  // rule 2: paths j -> k -> i
  for (int j : in_k)
    for (int i : out_k) {
      if (i == j) continue;
      bool in_labeled3 = false;
      if (Q.labeled_cycle && Q.labeled_cycle->size() == 3) {
        const auto& cyc = *Q.labeled_cycle;
        for (int m = 0; m < 3; ++m)
          if (cyc[m] == j && cyc[(m + 1) % 3] == k && cyc[(m + 2) % 3] == i)
            in_labeled3 = true;
      }
      if (in_labeled3) {
        // the labelled 3-cycle turns into the d-edge between i and j
        arrows.erase({i, j});
        lcyc3_fired = true;
        lcyc3_pair = {std::min(i, j), std::max(i, j)};
        continue;
      }
      if (Q.d_edge && Q.d_edge->pair == std::array<int, 2>{std::min(i, j), std::max(i, j)}) {
        // the d-edge closes up into a labelled 3-cycle through k
        arrows.insert({j, i});
        dedge_to_cycle = true;
        new_cycle = {j, i, k};
        continue;
      }
      if (Q.has_arrow(i, j)) {
        arrows.erase({i, j});
      } else if (Q.has_arrow(j, i)) {
        throw std::logic_error("mutate: parallel arrow would arise");
      } else {
        arrows.insert({j, i});
      }
    }

  R.arrows = std::move(arrows);

  if (lcyc3_fired) {
    R.labeled_cycle.reset();
    R.d_edge = DEdge{lcyc3_pair, {lcyc3_pair[1], lcyc3_pair[0]}};
    R.double_edges.clear();
    for (auto [i, j] : R.arrows) {
      for (int p : lcyc3_pair) {
        if (i == p) R.double_edges.insert(j);
        if (j == p) R.double_edges.insert(i);
      }
    }
    R.double_edges.erase(lcyc3_pair[0]);
    R.double_edges.erase(lcyc3_pair[1]);
  } else if (dedge_to_cycle) {
    R.d_edge.reset();
    R.double_edges.clear();
    R.labeled_cycle = normalize_cycle({new_cycle[0], new_cycle[1], new_cycle[2]});
  } else if (Q.labeled_cycle) {
    // rules 3 and 4: the labelled cycle shrinks past k or grows through it
    std::vector<int> cyc = *Q.labeled_cycle;
    auto pos = std::find(cyc.begin(), cyc.end(), k);
    if (pos != cyc.end()) {
      cyc.erase(pos);  // rule 3 (r >= 4)
      R.labeled_cycle = normalize_cycle(cyc);
    } else {
      // rule 4: an edge i -> j of the cycle was cancelled by a path through k
      std::vector<int> grown;
      bool changed = false;
      for (size_t m = 0; m < cyc.size(); ++m) {
        int i = cyc[m], j = cyc[(m + 1) % cyc.size()];
        grown.push_back(i);
        if (!R.has_arrow(i, j)) {
          if (changed || !R.has_arrow(i, k) || !R.has_arrow(k, j))
            throw std::logic_error("mutate: labelled cycle lost an edge");
          grown.push_back(k);
          changed = true;
        }
      }
      R.labeled_cycle = normalize_cycle(grown);
    }
  }

  // rule 5: mutation at a double-edge vertex seeing the whole d-edge pair
  if (Q.d_edge && Q.double_edges.count(k)) {
    auto [p, q] = std::pair(Q.d_edge->pair[0], Q.d_edge->pair[1]);
    auto contains = [](const std::vector<int>& v, int x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    };
    bool both_in = contains(in_k, p) && contains(in_k, q);
    bool both_out = contains(out_k, p) && contains(out_k, q);
    if (both_in || both_out) {
      int l = -1;  // the other double-edge vertex, if any; it loses its edge
      for (int v : Q.double_edges)
        if (v != k) l = v;
      R.double_edges.clear();
      R.double_edges.insert(k);
      const auto& flank = both_in ? out_k : in_k;
      for (int x : flank)
        if (x != p && x != q && x != l) R.double_edges.insert(x);
    }
  }

  R.validate();
  return R;
}

}  // namespace orbipres
