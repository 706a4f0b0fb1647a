#include "orbipres/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace orbipres {

TaggedTriangulation initial_triangulation(const ConeDisk& disk) {
  disk.validate();
  TaggedTriangulation T;
  T.disk = disk;
  T.arcs.push_back(TaggedArc::Radius(0, Tag::plain));
  T.arcs.push_back(TaggedArc::Radius(0, Tag::notched));
  if (disk.n >= 3) T.arcs.push_back(TaggedArc::Chord(1, 0));
  for (int j = 4; j <= disk.n; ++j) T.arcs.push_back(TaggedArc::Chord(j - 2, 0));
  T.validate();
  return T;
}

TaggedTriangulation flip(const TaggedTriangulation& T, int k) {
  if (k < 0 || k >= (int)T.arcs.size()) throw std::invalid_argument("flip: bad slot");
  std::vector<TaggedArc> rest;
  for (int i = 0; i < (int)T.arcs.size(); ++i)
    if (i != k) rest.push_back(T.arcs[i]);

  std::vector<TaggedArc> completions;
  for (const auto& cand : all_valid_arcs(T.disk)) {
    if (std::find(rest.begin(), rest.end(), cand) != rest.end()) continue;
    bool ok = true;
    for (const auto& arc : rest)
      if (!compatible(cand, arc, T.disk)) {
        ok = false;
        break;
      }
    if (ok) completions.push_back(cand);
  }
  if (completions.size() != 2)
    throw std::logic_error("flip: completion count " + std::to_string(completions.size()) +
                           " violates the model");
  TaggedTriangulation out = T;
  out.arcs[k] = completions[0] == T.arcs[k] ? completions[1] : completions[0];
  return out;
}

FlipGraph enumerate_flip_graph(const ConeDisk& disk, std::size_t cap) {
  FlipGraph g;
  std::map<std::vector<TaggedArc>, int> index;
  TaggedTriangulation t0 = initial_triangulation(disk);
  index[t0.sorted_arcs()] = 0;
  g.triangulations.push_back(t0);
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    TaggedTriangulation T = g.triangulations[cur];
    for (int k = 0; k < disk.n; ++k) {
      TaggedTriangulation next = flip(T, k);
      auto key = next.sorted_arcs();
      auto it = index.find(key);
      int id;
      if (it == index.end()) {
        if (g.triangulations.size() >= cap)
          throw ResourceError("flip graph larger than the guard cap");
        id = (int)g.triangulations.size();
        index.emplace(std::move(key), id);
        g.triangulations.push_back(next);
        frontier.push_back(id);
      } else {
        id = it->second;
      }
      g.edges.insert({std::min(cur, id), std::max(cur, id)});
    }
  }
  return g;
}

std::vector<std::vector<TaggedArc>> maximal_compatible_sets(const ConeDisk& disk) {
  auto arcs = all_valid_arcs(disk);
  const int n = disk.n;
  std::vector<std::vector<char>> comp(arcs.size(), std::vector<char>(arcs.size(), 0));
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i; j < arcs.size(); ++j)
      comp[i][j] = comp[j][i] = compatible(arcs[i], arcs[j], disk);

  std::vector<std::vector<TaggedArc>> out;
  std::vector<int> pick;
  auto extend = [&](auto&& self, size_t from) -> void {
    if ((int)pick.size() == n) {
      // sets of size n; maximality is checked afterwards
      std::vector<TaggedArc> set;
      for (int idx : pick) set.push_back(arcs[idx]);
      out.push_back(std::move(set));
      return;
    }
    for (size_t i = from; i < arcs.size(); ++i) {
      bool ok = true;
      for (int idx : pick)
        if (!comp[idx][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back((int)i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  extend(extend, 0);

  // keep only maximal ones (the model predicts all of them are)
  std::vector<std::vector<TaggedArc>> maximal;
  for (auto& set : out) {
    bool max = true;
    for (size_t i = 0; i < arcs.size() && max; ++i) {
      if (std::find(set.begin(), set.end(), arcs[i]) != set.end()) continue;
      bool fits = true;
      for (const auto& a : set)
        if (!compatible(arcs[i], a, disk)) {
          fits = false;
          break;
        }
      if (fits) max = false;
    }
    if (max) {
      std::sort(set.begin(), set.end());
      maximal.push_back(set);
    }
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  return maximal;
}

}  // namespace orbipres
