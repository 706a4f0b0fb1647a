#include "orbipres/present.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbipres {

namespace {

Word gen(int i) { return {{i, 1}}; }

Word braid_lhs(int i, int j) { return {{i, 1}, {j, 1}, {i, 1}}; }

Relator braid_relator(int i, int j) { return {braid_lhs(i, j), braid_lhs(j, i)}; }

Relator commute_relator(int i, int j) {
  return {{{i, 1}, {j, 1}}, {{j, 1}, {i, 1}}};
}

// s_a s_b s_c s_a ... with `terms` letters, letters cycling over (a,b,c,...)
Word cycle_word(const std::vector<int>& vs, int start, int terms) {
  Word w;
  const int r = (int)vs.size();
  for (int t = 0; t < terms; ++t) w.push_back({vs[(start + t) % r], 1});
  return w;
}

}  // namespace

void Presentation::validate() const {
  for (const auto& rel : relators)
    for (const auto& w : {rel.lhs, rel.rhs})
      for (const auto& l : w)
        if (l.gen < 0 || l.gen >= (int)generators.size())
          throw std::invalid_argument("presentation: relator uses undeclared generator");
}

std::vector<Word> Presentation::relator_words() const {
  std::vector<Word> out;
  for (const auto& rel : relators) out.push_back(rel.word());
  return out;
}

Presentation relations_from_quiver(const DecoratedQuiver& Q, Variant variant) {
  Q.validate();
  Presentation P;
  for (int i = 0; i < Q.n; ++i) P.generators.push_back("s" + std::to_string(i + 1));
  P.source = variant == Variant::braid      ? "quiver braid group"
             : variant == Variant::reflection ? "quiver reflection group"
                                              : "quiver group without cycle relations";

  auto adjacent = [&](int i, int j) {
    if (Q.has_arrow(i, j) || Q.has_arrow(j, i)) return true;
    return Q.d_edge && Q.d_edge->pair == std::array<int, 2>{std::min(i, j), std::max(i, j)};
  };

  // (1) commutations
  for (int i = 0; i < Q.n; ++i)
    for (int j = i + 1; j < Q.n; ++j)
      if (!adjacent(i, j)) P.relators.push_back(commute_relator(i, j));

  // (2) braid relations
  for (auto [i, j] : Q.arrows) P.relators.push_back(braid_relator(std::min(i, j), std::max(i, j)));

  // (3) unlabelled oriented 3-cycles: two of the three chain equalities
  bool labelled3 = Q.labeled_cycle && Q.labeled_cycle->size() == 3;
  for (int a = 0; a < Q.n; ++a)
    for (int b = 0; b < Q.n; ++b)
      for (int c = b + 1; c < Q.n; ++c) {
        if (a >= b || a >= c) continue;  // a is the least vertex
        int x = -1, y = -1;
        if (Q.has_arrow(a, b) && Q.has_arrow(b, c) && Q.has_arrow(c, a)) x = b, y = c;
        if (Q.has_arrow(a, c) && Q.has_arrow(c, b) && Q.has_arrow(b, a)) x = c, y = b;
        if (x < 0) continue;
        if (labelled3) {
          std::vector<int> tri{a, x, y};
          std::sort(tri.begin(), tri.end());
          std::vector<int> cyc = *Q.labeled_cycle;
          std::sort(cyc.begin(), cyc.end());
          if (tri == cyc) continue;
        }
        std::vector<int> vs{a, x, y};
        P.relators.push_back({cycle_word(vs, 0, 4), cycle_word(vs, 1, 4)});
        P.relators.push_back({cycle_word(vs, 1, 4), cycle_word(vs, 2, 4)});
      }

  // (4) the alternating d-letter relation on the d-edge
  if (Q.d_edge) {
    auto [i, j] = std::pair(Q.d_edge->ordered[0], Q.d_edge->ordered[1]);
    P.relators.push_back({alternating(i, j, Q.d), alternating(j, i, Q.d)});
  }

  // (5) labelled cycle: the r-1 adjacent equalities of length d(r-1)
  if (Q.labeled_cycle && variant != Variant::no_cycle) {
    const auto& vs = *Q.labeled_cycle;
    const int r = (int)vs.size();
    const int terms = Q.d * (r - 1);
    for (int m = 0; m + 1 < r; ++m)
      P.relators.push_back({cycle_word(vs, m, terms), cycle_word(vs, m + 1, terms)});
  }

  // (6) double-edge relations (s_k s_i s_j)^2 = (s_i s_j s_k)^2
  if (Q.d_edge) {
    auto [p, q] = std::pair(Q.d_edge->pair[0], Q.d_edge->pair[1]);
    for (int k : Q.double_edges) {
      bool in_p = Q.has_arrow(p, k), in_q = Q.has_arrow(q, k);
      bool out_p = Q.has_arrow(k, p), out_q = Q.has_arrow(k, q);
      if (!((in_p || out_p) && (in_q || out_q)))
        throw std::logic_error("double-edge vertex not adjacent to the d-edge pair");
      int i, j;
      if ((in_p && in_q) || (out_p && out_q)) {
        i = Q.d_edge->ordered[0];
        j = Q.d_edge->ordered[1];
      } else {
        i = out_p ? p : q;  // the endpoint k points to
        j = out_p ? q : p;
      }
      Word kij = {{k, 1}, {i, 1}, {j, 1}};
      Word ijk = {{i, 1}, {j, 1}, {k, 1}};
      P.relators.push_back({power(kij, 2), power(ijk, 2)});
    }
  }

  // (7) oriented 4-cycle with the d-edge as diagonal
  if (Q.d_edge) {
    auto [p, q] = std::pair(Q.d_edge->pair[0], Q.d_edge->pair[1]);
    for (int b = 0; b < Q.n; ++b) {
      if (!Q.has_arrow(p, b) || !Q.has_arrow(b, q)) continue;
      for (int e = 0; e < Q.n; ++e) {
        if (e == b || !Q.has_arrow(q, e) || !Q.has_arrow(e, p)) continue;
        // cycle p -> b -> q -> e -> p with diagonal {p,q}
        std::vector<int> vs{p, b, q, e};
        P.relators.push_back({cycle_word(vs, 0, 6), cycle_word(vs, 3, 6)});
        P.relators.push_back({cycle_word(vs, 1, 6), cycle_word(vs, 2, 6)});
      }
    }
  }

  if (variant == Variant::reflection)
    for (int i = 0; i < Q.n; ++i) P.relators.push_back({power(gen(i), 2), {}});

  P.validate();
  return P;
}

Presentation reference_presentation(int d, int n, Reference which) {
  if (d < 2 || n < 2) throw std::invalid_argument("reference presentation: need d,n >= 2");
  Presentation P;
  if (which == Reference::bmr_braid) {
    // generators tau2', tau2, tau3, ..., taun (indices 0, 1, 2, ..., n-1)
    P.source = "BMR braid presentation";
    P.generators.push_back("tau2p");
    for (int i = 2; i <= n; ++i) P.generators.push_back("tau" + std::to_string(i));
    auto idx = [](int i) { return i - 1; };  // tau_i for i >= 2
    for (int i = 2; i <= n - 1; ++i) P.relators.push_back(braid_relator(idx(i), idx(i + 1)));
    if (n >= 3) P.relators.push_back(braid_relator(0, idx(3)));
    for (int i = 2; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) P.relators.push_back(commute_relator(idx(i), idx(j)));
    for (int i = 4; i <= n; ++i) P.relators.push_back(commute_relator(0, idx(i)));
    if (n >= 3) {
      Word kij = {{idx(2), 1}, {0, 1}, {idx(3), 1}};   // tau2 tau2' tau3
      Word ijk = {{idx(3), 1}, {idx(2), 1}, {0, 1}};   // tau3 tau2 tau2'
      P.relators.push_back({power(kij, 2), power(ijk, 2)});
    }
    P.relators.push_back({alternating(idx(2), 0, d), alternating(0, idx(2), d)});
  } else {
    // generators s, t2, ..., tn of the type-B Artin group, modulo s^d
    P.source = "Artin B_n modulo s^d";
    P.generators.push_back("s");
    for (int i = 2; i <= n; ++i) P.generators.push_back("t" + std::to_string(i));
    auto idx = [](int i) { return i - 1; };  // t_i
    for (int i = 2; i <= n - 1; ++i) P.relators.push_back(braid_relator(idx(i), idx(i + 1)));
    for (int i = 2; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j) P.relators.push_back(commute_relator(idx(i), idx(j)));
    for (int i = 3; i <= n; ++i) P.relators.push_back(commute_relator(0, idx(i)));
    Word st = {{0, 1}, {idx(2), 1}};
    Word ts = {{idx(2), 1}, {0, 1}};
    P.relators.push_back({power(st, 2), power(ts, 2)});
    P.relators.push_back({power(gen(0), d), {}});
  }
  P.validate();
  return P;
}

std::vector<Word> n_subgroup_generators(const Presentation& artin_b) {
  if (artin_b.generators.empty() || artin_b.generators[0] != "s")
    throw std::invalid_argument("N generators need the Artin B_n presentation");
  const int n = (int)artin_b.generators.size();
  std::vector<Word> gens;
  gens.push_back(reduced({{0, 1}, {1, 1}, {0, -1}}));  // s t2 s^-1
  for (int i = 1; i < n; ++i) gens.push_back(gen(i));
  return gens;
}

std::string to_text(const Presentation& P) {
  std::string out = "gens:";
  for (const auto& g : P.generators) out += " " + g;
  out += "\n";
  for (const auto& rel : P.relators)
    out += "rel: " + word_to_string(rel.lhs, P.generators) + " = " +
           word_to_string(rel.rhs, P.generators) + "\n";
  return out;
}

std::string to_algebra_text(const Presentation& P) {
  std::string out = "F := FreeGroup(" + std::to_string(P.generators.size()) + ");\n";
  out += "rels := [\n";
  bool first = true;
  for (const auto& rel : P.relators) {
    Word w = rel.word();
    if (!first) out += ",\n";
    first = false;
    out += "  ";
    if (w.empty()) {
      out += "One(F)";
      continue;
    }
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out += "*";
      out += "F." + std::to_string(w[i].gen + 1);
      if (w[i].exp == -1) out += "^-1";
    }
  }
  out += "\n];\n";
  return out;
}

}  // namespace orbipres
