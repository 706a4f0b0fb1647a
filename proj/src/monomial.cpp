#include "orbipres/monomial.hpp"

#include <deque>
#include <unordered_set>

namespace orbipres {

namespace {
int mod(int x, int m) { return ((x % m) + m) % m; }
}

MonomialElement MonomialElement::identity(int n, int d) {
  MonomialElement e;
  e.n = n;
  e.d = d;
  e.sigma.resize(n);
  e.exps.assign(n, 0);
  for (int i = 0; i < n; ++i) e.sigma[i] = (uint8_t)i;
  return e;
}

MonomialElement MonomialElement::reflection(int a, int b, int c, int n, int d) {
  if (a == b || a < 1 || b < 1 || a > n || b > n)
    throw std::invalid_argument("reflection: bad indices");
  if (a > b) return reflection(b, a, -c, n, d);
  MonomialElement e = identity(n, d);
  e.sigma[a - 1] = (uint8_t)(b - 1);
  e.sigma[b - 1] = (uint8_t)(a - 1);
  e.exps[a - 1] = (uint8_t)mod(-c, d);
  e.exps[b - 1] = (uint8_t)mod(c, d);
  return e;
}

MonomialElement MonomialElement::diagonal(const std::vector<int>& exps, int d) {
  MonomialElement e = identity((int)exps.size(), d);
  for (int i = 0; i < e.n; ++i) e.exps[i] = (uint8_t)mod(exps[i], d);
  return e;
}

bool MonomialElement::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (sigma[i] != i || exps[i] != 0) return false;
  return true;
}

bool MonomialElement::in_gddn() const {
  int s = 0;
  for (int i = 0; i < n; ++i) s += exps[i];
  return s % d == 0;
}

MonomialElement MonomialElement::inverse() const {
  MonomialElement out = identity(n, d);
  for (int i = 0; i < n; ++i) {
    out.sigma[sigma[i]] = (uint8_t)i;
    out.exps[sigma[i]] = (uint8_t)mod(-(int)exps[i], d);
  }
  return out;
}

std::string MonomialElement::key() const {
  std::string k;
  k.reserve(2 * n);
  for (int i = 0; i < n; ++i) k.push_back((char)sigma[i]);
  for (int i = 0; i < n; ++i) k.push_back((char)exps[i]);
  return k;
}

MonomialElement multiply(const MonomialElement& g, const MonomialElement& h) {
  if (g.n != h.n || g.d != h.d) throw std::invalid_argument("multiply: mismatched n or d");
  MonomialElement out;
  out.n = g.n;
  out.d = g.d;
  out.sigma.resize(g.n);
  out.exps.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    out.sigma[i] = h.sigma[g.sigma[i]];
    out.exps[i] = (uint8_t)((g.exps[i] + h.exps[g.sigma[i]]) % g.d);
  }
  return out;
}

MonomialElement evaluate(const Word& w, const std::vector<MonomialElement>& assignment) {
  if (assignment.empty()) throw std::invalid_argument("evaluate: empty assignment");
  MonomialElement acc = MonomialElement::identity(assignment[0].n, assignment[0].d);
  for (const auto& l : w) {
    if (l.gen < 0 || l.gen >= (int)assignment.size())
      throw std::invalid_argument("evaluate: unassigned generator");
    const MonomialElement& img = assignment[l.gen];
    acc = multiply(acc, l.exp == 1 ? img : img.inverse());
  }
  return acc;
}

SubgroupClosure generate_subgroup(const std::vector<MonomialElement>& gens, std::size_t cap,
                                  bool keep_elements) {
  SubgroupClosure out;
  if (gens.empty()) {
    out.order = 1;
    return out;
  }
  const int n = gens[0].n, d = gens[0].d;
  for (const auto& g : gens)
    if (g.n != n || g.d != d) throw std::invalid_argument("generate_subgroup: mixed n or d");

  std::unordered_set<std::string> seen;
  std::deque<MonomialElement> frontier;
  MonomialElement e = MonomialElement::identity(n, d);
  seen.insert(e.key());
  frontier.push_back(e);
  if (keep_elements) out.elements.push_back(e);
  while (!frontier.empty()) {
    MonomialElement cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      MonomialElement next = multiply(cur, g);
      if (seen.insert(next.key()).second) {
        if (seen.size() > cap) throw ResourceError("subgroup closure exceeded cap");
        if (keep_elements) out.elements.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  out.order = seen.size();
  return out;
}

}  // namespace orbipres
