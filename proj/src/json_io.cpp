#include "orbipres/json_io.hpp"

#include <fstream>

namespace orbipres {

json to_json(const TaggedTriangulation& T) {
  json arcs = json::array();
  for (const auto& a : T.arcs) {
    if (a.is_chord())
      arcs.push_back({{"type", "chord"}, {"from", a.a}, {"to", a.b}});
    else
      arcs.push_back({{"type", "radius"},
                      {"at", a.a},
                      {"tag", a.tag == Tag::plain ? "plain" : "notched"}});
  }
  return {{"n", T.n()}, {"d", T.d()}, {"arcs", arcs}};
}

TaggedTriangulation triangulation_from_json(const json& j) {
  TaggedTriangulation T;
  T.disk.n = j.at("n").get<int>();
  T.disk.d = j.at("d").get<int>();
  for (const auto& a : j.at("arcs")) {
    std::string type = a.at("type").get<std::string>();
    if (type == "chord")
      T.arcs.push_back(TaggedArc::Chord(a.at("from").get<int>(), a.at("to").get<int>()));
    else if (type == "radius")
      T.arcs.push_back(TaggedArc::Radius(
          a.at("at").get<int>(),
          a.at("tag").get<std::string>() == "notched" ? Tag::notched : Tag::plain));
    else
      throw std::invalid_argument("triangulation json: unknown arc type " + type);
  }
  T.validate();
  return T;
}

json to_json(const DecoratedQuiver& Q) {
  json arrows = json::array();
  for (auto [i, j] : Q.arrows) arrows.push_back({i + 1, j + 1});
  json vertices = json::array();
  for (int i = 1; i <= Q.n; ++i) vertices.push_back(i);
  json dbl = json::array();
  for (int v : Q.double_edges) dbl.push_back(v + 1);
  json out = {{"d", Q.d},
              {"vertices", vertices},
              {"arrows", arrows},
              {"double_edges", dbl},
              {"d_edge", nullptr},
              {"labeled_cycle", nullptr}};
  if (Q.d_edge)
    out["d_edge"] = {{"pair", {Q.d_edge->pair[0] + 1, Q.d_edge->pair[1] + 1}},
                     {"ordered", {Q.d_edge->ordered[0] + 1, Q.d_edge->ordered[1] + 1}}};
  if (Q.labeled_cycle) {
    json cyc = json::array();
    for (int v : *Q.labeled_cycle) cyc.push_back(v + 1);
    out["labeled_cycle"] = cyc;
  }
  return out;
}

DecoratedQuiver quiver_from_json(const json& j) {
  DecoratedQuiver Q;
  Q.d = j.at("d").get<int>();
  Q.n = (int)j.at("vertices").size();
  for (const auto& a : j.at("arrows")) Q.arrows.insert({a[0].get<int>() - 1, a[1].get<int>() - 1});
  if (!j.at("d_edge").is_null()) {
    const auto& de = j.at("d_edge");
    DEdge e;
    e.pair = {de.at("pair")[0].get<int>() - 1, de.at("pair")[1].get<int>() - 1};
    e.ordered = {de.at("ordered")[0].get<int>() - 1, de.at("ordered")[1].get<int>() - 1};
    Q.d_edge = e;
  }
  for (const auto& v : j.at("double_edges")) Q.double_edges.insert(v.get<int>() - 1);
  if (!j.at("labeled_cycle").is_null()) {
    std::vector<int> cyc;
    for (const auto& v : j.at("labeled_cycle")) cyc.push_back(v.get<int>() - 1);
    Q.labeled_cycle = cyc;
  }
  Q.validate();
  return Q;
}

json to_json(const MonomialElement& m) {
  json sigma = json::array(), exps = json::array();
  for (int i = 0; i < m.n; ++i) {
    sigma.push_back(m.sigma[i] + 1);
    exps.push_back(m.exps[i]);
  }
  return {{"n", m.n}, {"d", m.d}, {"sigma", sigma}, {"exp", exps}};
}

json to_json(const NuCertificate& cert) {
  return {{"relators_ok", cert.relators_ok},
          {"failing_relator", cert.failing_relator},
          {"image_order", cert.image_order},
          {"presented_order", cert.presented_order},
          {"expected_order", cert.expected_order},
          {"pass", cert.pass()}};
}

std::string flip_graph_dot(const FlipGraph& g) {
  std::string out = "graph flips {\n";
  for (size_t i = 0; i < g.triangulations.size(); ++i) {
    std::string label;
    for (const auto& a : g.triangulations[i].arcs)
      label += (label.empty() ? "" : " ") + to_string(a);
    out += "  t" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (auto [i, j] : g.edges)
    out += "  t" + std::to_string(i) + " -- t" + std::to_string(j) + ";\n";
  return out + "}\n";
}

std::string flip_graph_csv(const FlipGraph& g) {
  std::string out = "source,target\n";
  for (auto [i, j] : g.edges)
    out += std::to_string(i) + "," + std::to_string(j) + "\n";
  return out;
}

std::string file_hash_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "missing";
  uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= (unsigned char)c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

}  // namespace orbipres
