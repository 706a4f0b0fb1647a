#include "orbipres/consequence.hpp"

#include <deque>
#include <set>

namespace orbipres {

namespace {

bool match_at(const Word& w, size_t pos, const Word& pat) {
  if (pos + pat.size() > w.size()) return false;
  for (size_t i = 0; i < pat.size(); ++i)
    if (!(w[pos + i] == pat[i])) return false;
  return true;
}

Word splice(const Word& w, size_t pos, size_t len, const Word& repl) {
  Word out(w.begin(), w.begin() + pos);
  out.insert(out.end(), repl.begin(), repl.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return reduced(std::move(out));
}

}  // namespace

ConsequenceResult bounded_consequence(const Presentation& P, const Word& lhs, const Word& rhs,
                                      int depth_budget, std::size_t state_cap) {
  Word start = reduced(lhs);
  Word goal = reduced(rhs);
  if (start == goal) return ConsequenceResult::proved;

  std::vector<std::pair<Word, Word>> rules;
  for (const auto& rel : P.relators) {
    Word l = reduced(rel.lhs), r = reduced(rel.rhs);
    rules.push_back({l, r});
    rules.push_back({r, l});
    rules.push_back({inverse(l), inverse(r)});
    rules.push_back({inverse(r), inverse(l)});
  }

  // bidirectional: a rewrite destroyed by free cancellation on one side is
  // often still visible from the other, and every rule is reversible
  std::set<Word> seen[2] = {{start}, {goal}};
  std::deque<std::pair<Word, int>> queue[2] = {{{start, 0}}, {{goal, 0}}};
  std::size_t states = 2;
  while (!queue[0].empty() || !queue[1].empty()) {
    int side = queue[1].empty() || (!queue[0].empty() && queue[0].size() <= queue[1].size())
                   ? 0
                   : 1;
    auto [w, depth] = queue[side].front();
    queue[side].pop_front();
    if (depth >= depth_budget) continue;
    for (const auto& [from, to] : rules) {
      if (from.empty()) continue;
      for (size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (!match_at(w, pos, from)) continue;
        Word next = splice(w, pos, from.size(), to);
        if (seen[1 - side].count(next)) return ConsequenceResult::proved;
        if (states >= state_cap) return ConsequenceResult::unknown;
        if (seen[side].insert(next).second) {
          ++states;
          queue[side].push_back({next, depth + 1});
        }
      }
    }
  }
  return ConsequenceResult::unknown;
}

}  // namespace orbipres
