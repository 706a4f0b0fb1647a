#include "orbipres/coset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace orbipres {

namespace {

constexpr int kUndef = -1;

// classic coset-table machine with immediate coincidence handling
struct Machine {
  int ng;                              // generators
  std::vector<std::vector<int>> tab;   // rows x 2ng
  std::vector<int> rep;                // union-find over rows
  std::deque<std::pair<int, int>> coincidences;
  std::size_t defined = 1;
  std::size_t deductions = 0;

  explicit Machine(int ng_) : ng(ng_) { tab.emplace_back(2 * ng, kUndef); }

  static int col(int gen, int exp) { return 2 * gen + (exp < 0 ? 1 : 0); }
  static int inv_col(int c) { return c ^ 1; }

  int find(int a) {
    while (rep.size() <= (size_t)a) rep.push_back((int)rep.size());
    int r = a;
    while (rep[r] != r) r = rep[r];
    while (rep[a] != r) {
      int nx = rep[a];
      rep[a] = r;
      a = nx;
    }
    return r;
  }

  int new_coset() {
    tab.emplace_back(2 * ng, kUndef);
    ++defined;
    int id = (int)tab.size() - 1;
    find(id);
    return id;
  }

  int get(int c, int k) {
    int v = tab[c][k];
    if (v == kUndef) return kUndef;
    v = find(v);
    tab[c][k] = v;
    return v;
  }

  void set(int c, int k, int dst) {
    c = find(c);
    dst = find(dst);
    int cur = get(c, k);
    if (cur != kUndef) {
      if (cur != dst) coincidences.push_back({cur, dst});
      return;
    }
    tab[c][k] = dst;
    ++deductions;
    int back = get(dst, inv_col(k));
    if (back == kUndef)
      tab[dst][inv_col(k)] = c;
    else if (back != c)
      coincidences.push_back({back, c});
  }

  void process_coincidences() {
    while (!coincidences.empty()) {
      auto [a, b] = coincidences.front();
      coincidences.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      rep[b] = a;  // b dies; stale entries still resolve through find()
      for (int k = 0; k < 2 * ng; ++k) {
        int v = tab[b][k];
        if (v == kUndef) continue;
        v = find(v);
        int cur = get(a, k);
        if (cur == kUndef) {
          tab[a][k] = v;
          if (tab[v][inv_col(k)] == kUndef) tab[v][inv_col(k)] = a;
        } else if (cur != v) {
          coincidences.push_back({cur, v});
        }
      }
    }
  }

  bool alive(int c) { return find(c) == c; }

  // scan the word at coset c; fill gaps when allowed, deduce single gaps
  void scan(int c, const Word& w, bool fill) {
    c = find(c);
    if (w.empty()) return;
    int f = c;
    size_t i = 0;
    while (i < w.size()) {
      int nx = get(f, col(w[i].gen, w[i].exp));
      if (nx == kUndef) break;
      f = nx;
      ++i;
    }
    if (i == w.size()) {
      if (f != c) coincidences.push_back({f, c});
      return;
    }
    int b = c;
    size_t j = w.size() - 1;
    while (j > i) {
      int nx = get(b, col(w[j].gen, -w[j].exp));
      if (nx == kUndef) break;
      b = nx;
      --j;
    }
    if (j == i) {
      set(f, col(w[i].gen, w[i].exp), b);
      return;
    }
    if (!fill) return;
    // fill the first gap and continue scanning
    int fresh = new_coset();
    set(f, col(w[i].gen, w[i].exp), fresh);
    process_coincidences();
    if (alive(c)) scan(find(c), w, true);
  }
};

CosetTable finish(Machine& m) {
  CosetTable out;
  out.status = CosetTable::Status::complete;
  out.cosets_defined = m.defined;
  out.deductions = m.deductions;
  std::vector<int> remap(m.tab.size(), -1);
  int live = 0;
  for (int c = 0; c < (int)m.tab.size(); ++c)
    if (m.alive(c)) remap[c] = live++;
  out.index = live;
  out.table.assign(live, std::vector<int>(m.tab[0].size(), kUndef));
  for (int c = 0; c < (int)m.tab.size(); ++c) {
    if (remap[c] < 0) continue;
    for (size_t k = 0; k < m.tab[c].size(); ++k) {
      int v = m.tab[c][k];
      out.table[remap[c]][k] = v == kUndef ? kUndef : remap[m.find(v)];
    }
  }
  return out;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& P, const std::vector<Word>& subgroup_gens,
                        std::size_t cap, TCStrategy strategy) {
  P.validate();
  if (cap == 0) throw std::invalid_argument("todd_coxeter: cap must be positive");
  const int ng = (int)P.generators.size();
  std::vector<Word> rels = P.relator_words();

  Machine m(ng);
  for (const auto& w : subgroup_gens) {
    m.scan(0, w, true);
    m.process_coincidences();
  }

  auto capped = [&]() {
    CosetTable out;
    out.status = CosetTable::Status::capped;
    out.cosets_defined = m.defined;
    out.deductions = m.deductions;
    return out;
  };

  if (strategy == TCStrategy::hlt_lookahead) {
    std::size_t lookahead_at = std::max<std::size_t>(cap / 2, 256);
    bool lookahead_done = false;
    for (int c = 0; c < (int)m.tab.size(); ++c) {
      if (!m.alive(c)) continue;
      for (const auto& w : rels) {
        if (!m.alive(c)) break;
        m.scan(m.find(c), w, true);
        m.process_coincidences();
        if (m.defined > cap) return capped();
        if (!lookahead_done && m.defined > lookahead_at) {
          // deduction-only sweep before defining further cosets
          for (int x = 0; x < (int)m.tab.size(); ++x) {
            if (!m.alive(x)) continue;
            for (const auto& r : rels) {
              m.scan(m.find(x), r, false);
              m.process_coincidences();
            }
          }
          lookahead_done = true;
        }
      }
      // close any column no relator touches
      if (m.alive(c))
        for (int k = 0; k < 2 * ng; ++k)
          if (m.get(m.find(c), k) == kUndef) {
            int fresh = m.new_coset();
            m.set(m.find(c), k, fresh);
            m.process_coincidences();
            if (m.defined > cap) return capped();
          }
    }
    return finish(m);
  }

  // Felsch: define the first open entry, then close under deductions
  for (;;) {
    bool stable = false;
    while (!stable) {
      stable = true;
      std::size_t before = m.deductions;
      for (int c = 0; c < (int)m.tab.size(); ++c) {
        if (!m.alive(c)) continue;
        for (const auto& w : rels) {
          m.scan(m.find(c), w, false);
          m.process_coincidences();
        }
      }
      if (m.deductions != before) stable = false;
    }
    int oc = -1, ok = -1;
    for (int c = 0; c < (int)m.tab.size() && oc < 0; ++c) {
      if (!m.alive(c)) continue;
      for (int k = 0; k < 2 * ng; ++k)
        if (m.get(c, k) == kUndef) {
          oc = c;
          ok = k;
          break;
        }
    }
    if (oc < 0) return finish(m);
    int fresh = m.new_coset();
    m.set(oc, ok, fresh);
    m.process_coincidences();
    if (m.defined > cap) return capped();
  }
}

std::string CosetTable::to_csv(const std::vector<std::string>& gen_names) const {
  std::string out = "coset";
  for (const auto& g : gen_names) out += "," + g + "," + g + "^-1";
  out += "\n";
  for (size_t c = 0; c < table.size(); ++c) {
    out += std::to_string(c + 1);
    for (int v : table[c]) out += "," + (v < 0 ? std::string("-") : std::to_string(v + 1));
    out += "\n";
  }
  return out;
}

bool cosets_are_powers_of(const CosetTable& t, int gen) {
  if (t.status != CosetTable::Status::complete) return false;
  std::vector<char> seen(t.index, 0);
  int c = 0;
  for (size_t i = 0; i < t.index; ++i) {
    if (c < 0 || seen[c]) break;
    seen[c] = 1;
    c = t.act(c, gen, +1);
  }
  return std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; });
}

}  // namespace orbipres
