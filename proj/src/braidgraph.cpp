#include "orbipres/braidgraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orbipres/coset.hpp"
#include "orbipres/present.hpp"
#include "orbipres/quiver.hpp"

namespace orbipres {

BraidGraph braid_graph(const TaggedTriangulation& T) {
  return braid_graph(T, regions_of(T));
}

BraidGraph braid_graph(const TaggedTriangulation& T, const RegionDecomposition& rd) {
  BraidGraph g;
  g.n = T.n();
  g.edges = rd.arc_regions;

  // peel leaves; what survives is the unique cycle
  std::vector<int> degree(g.n, 0);
  std::vector<char> edge_alive(g.n, 1), vert_alive(g.n, 1);
  for (const auto& e : g.edges) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (!vert_alive[v] || degree[v] != 1) continue;
      for (int s = 0; s < g.n; ++s) {
        if (!edge_alive[s]) continue;
        if (g.edges[s][0] == v || g.edges[s][1] == v) {
          edge_alive[s] = 0;
          --degree[g.edges[s][0]];
          --degree[g.edges[s][1]];
          vert_alive[v] = 0;
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<int> cyc_edges;
  for (int s = 0; s < g.n; ++s)
    if (edge_alive[s]) cyc_edges.push_back(s);
  if (cyc_edges.size() < 2) throw std::logic_error("braid graph: cycle missing");

  // walk the cycle coherently, starting from the smallest surviving slot
  int e0 = cyc_edges[0];
  int start = g.edges[e0][0];
  g.cycle_vertices.push_back(start);
  g.cycle_edges.push_back(e0);
  int cur = g.edges[e0][1];
  int used = e0;
  while (cur != start) {
    g.cycle_vertices.push_back(cur);
    int next_e = -1;
    for (int s : cyc_edges)
      if (s != used && (g.edges[s][0] == cur || g.edges[s][1] == cur)) {
        next_e = s;
        break;
      }
    if (next_e < 0) throw std::logic_error("braid graph: cycle walk broke");
    g.cycle_edges.push_back(next_e);
    used = next_e;
    cur = g.edges[next_e][0] == cur ? g.edges[next_e][1] : g.edges[next_e][0];
  }
  if (g.cycle_edges.size() != cyc_edges.size())
    throw std::logic_error("braid graph: more than one cycle");
  return g;
}

MonomialElement ReflectionAssignment::reflection(int slot, int n, int d) const {
  return MonomialElement::reflection(directed[slot][0], directed[slot][1], labels[slot], n, d);
}

ReflectionAssignment reflection_assignment(const TaggedTriangulation& T, const BraidGraph& g,
                                           const std::optional<std::map<int, int>>& labels) {
  ReflectionAssignment out;
  const int n = T.n();
  out.directed.resize(n);
  out.labels.assign(n, 0);
  for (int s = 0; s < n; ++s) out.directed[s] = {g.edges[s][0] + 1, g.edges[s][1] + 1};

  if (labels) {
    for (auto [slot, c] : *labels) {
      if (slot < 0 || slot >= n) throw std::invalid_argument("labels: bad slot");
      out.labels[slot] = c;
    }
  } else {
    int dist = *std::min_element(g.cycle_edges.begin(), g.cycle_edges.end());
    out.labels[dist] = 1;
  }

  // coherent cycle orientation: edge m runs cycle_vertices[m] -> [m+1]
  long long sum = 0;
  for (size_t m = 0; m < g.cycle_edges.size(); ++m) {
    int s = g.cycle_edges[m];
    int from = g.cycle_vertices[m] + 1;
    sum += out.directed[s][0] == from ? out.labels[s] : -out.labels[s];
  }
  out.delta = (int)std::llabs(sum);
  if (std::gcd(out.delta, T.d()) != 1)
    throw std::invalid_argument("reflection labels rejected: delta = " +
                                std::to_string(out.delta) + " shares a factor with d");
  return out;
}

std::size_t gddn_order(int d, int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  for (int i = 1; i < n; ++i) f *= d;
  return f;
}

NuCertificate verify_nu(const TaggedTriangulation& T, const ReflectionAssignment& assignment,
                        std::size_t cap) {
  NuCertificate cert;
  const int n = T.n(), d = T.d();
  cert.expected_order = gddn_order(d, n);

  DecoratedQuiver Q = quiver_from_triangulation(T);
  Presentation P = relations_from_quiver(Q, Variant::reflection);

  std::vector<MonomialElement> gens;
  for (int s = 0; s < n; ++s) gens.push_back(assignment.reflection(s, n, d));

  cert.relators_ok = true;
  auto words = P.relator_words();
  for (size_t i = 0; i < words.size(); ++i)
    if (!evaluate(words[i], gens).is_identity()) {
      cert.relators_ok = false;
      cert.failing_relator = (int)i;
      break;
    }

  cert.image_order = generate_subgroup(gens, cap).order;

  CosetTable tc = todd_coxeter(P, {}, cap);
  cert.presented_order = tc.status == CosetTable::Status::complete ? tc.index : 0;
  return cert;
}

}  // namespace orbipres
