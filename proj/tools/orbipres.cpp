#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "orbipres/abelian.hpp"
#include "orbipres/braidgraph.hpp"
#include "orbipres/consequence.hpp"
#include "orbipres/coset.hpp"
#include "orbipres/diagram.hpp"
#include "orbipres/json_io.hpp"
#include "orbipres/present.hpp"
#include "orbipres/surface.hpp"
#include "orbipres/sweeps.hpp"

using namespace orbipres;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapped = 3;

std::size_t coset_cap() {
  if (const char* env = std::getenv("ORBIPRES_MAX_COSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return (std::size_t)v;
    throw CLI::ValidationError("ORBIPRES_MAX_COSETS", "not a positive integer");
  }
  return 1000000;
}

struct Report {
  json j;
  std::string path;

  Report(const std::string& verb, const std::string& out_path) : path(out_path) {
    j["tool"] = "orbipres";
    j["version"] = kVersion;
    j["command"] = verb;
    j["inputs"] = json::object();
  }
  void input(const std::string& file) {
    if (!file.empty()) j["inputs"][file] = file_hash_hex(file);
  }
  void write(bool pass) {
    j["pass"] = pass;
    if (!path.empty()) {
      std::ofstream out(path);
      out << j.dump(2) << "\n";
    }
  }
};

TaggedTriangulation load_triangulation(const std::string& file, int d, int n) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("--in", "cannot open " + file);
    json j;
    in >> j;
    return triangulation_from_json(j);
  }
  return initial_triangulation({n, d});
}

void write_or_print(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    f << text;
  }
}

Variant parse_variant(const std::string& v) {
  if (v == "braid") return Variant::braid;
  if (v == "reflection") return Variant::reflection;
  if (v == "no_cycle") return Variant::no_cycle;
  throw CLI::ValidationError("--variant", "must be braid, reflection or no_cycle");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presentation workbench for tagged triangulations of the cone disk"};
  app.require_subcommand(1);

  int d = 3, n = 3, slot = 1, vertex = 1, budget = 12;
  int walks = 1000, steps = 40;
  uint64_t seed = 1;
  std::string in_file, out_file, report_file, format = "text", variant = "reflection";
  std::string dot_file, csv_file, lhs_str, rhs_str;
  std::vector<std::string> rel_strs, gen_names;
  bool exhaustive = false;

  auto add_common = [&](CLI::App* cmd, bool with_dn = true) {
    cmd->add_option("--report", report_file, "write the machine-readable report here");
    if (with_dn) {
      cmd->add_option("--d", d, "cone point degree");
      cmd->add_option("--n", n, "boundary marked points");
    }
  };

  auto* c_present = app.add_subcommand("present", "presentation of a triangulation");
  add_common(c_present);
  c_present->add_option("--in", in_file, "triangulation JSON (default: T0)");
  c_present->add_option("--variant", variant, "braid | reflection | no_cycle");
  c_present->add_option("--format", format, "json | text | algebra");
  c_present->add_option("--out", out_file, "output file (default stdout)");

  auto* c_flip = app.add_subcommand("flip", "flip one arc slot");
  add_common(c_flip);
  c_flip->add_option("--slot", slot, "slot to flip, 1-based")->required();
  c_flip->add_option("--in", in_file, "triangulation JSON (default: T0)");
  c_flip->add_option("--out", out_file, "output triangulation JSON");

  auto* c_mutate = app.add_subcommand("mutate", "mutate a decorated quiver");
  add_common(c_mutate);
  c_mutate->add_option("--vertex", vertex, "vertex to mutate, 1-based")->required();
  c_mutate->add_option("--in", in_file, "quiver JSON (default: quiver of T0)");
  c_mutate->add_option("--out", out_file, "output quiver JSON");

  auto* c_orbit = app.add_subcommand("orbit", "enumerate the flip graph");
  add_common(c_orbit);
  c_orbit->add_option("--dot", dot_file, "write DOT export");
  c_orbit->add_option("--csv", csv_file, "write edge-list CSV");

  auto* c_vm = app.add_subcommand("verify-mutation", "flip vs mutation compatibility");
  add_common(c_vm);
  c_vm->add_flag("--exhaustive", exhaustive, "sweep the whole flip graph");
  c_vm->add_option("--walks", walks, "random walks when not exhaustive");
  c_vm->add_option("--steps", steps, "steps per walk");
  c_vm->add_option("--seed", seed, "walk seed");

  auto* c_nu = app.add_subcommand("verify-nu", "reflection certificate");
  add_common(c_nu);
  c_nu->add_option("--in", in_file, "triangulation JSON (default: T0)");

  auto* c_order = app.add_subcommand("order", "coset-enumeration order of the presented group");
  add_common(c_order);
  c_order->add_option("--triangulation", in_file, "triangulation JSON (default: T0)");
  c_order->add_option("--variant", variant, "braid | reflection | no_cycle");

  auto* c_index = app.add_subcommand("index-n", "index of N in Artin B_n mod s^d");
  add_common(c_index);

  auto* c_diag = app.add_subcommand("diagram-check", "commuting square certificate");
  add_common(c_diag);

  auto* c_ab = app.add_subcommand("abelianization", "integer normal form of a presentation");
  add_common(c_ab);
  c_ab->add_option("--in", in_file, "triangulation JSON (default: T0)");
  c_ab->add_option("--variant", variant, "braid | reflection | no_cycle");

  auto* c_prove = app.add_subcommand("prove", "bounded consequence search");
  add_common(c_prove, false);
  c_prove->add_option("--report", report_file, "");
  c_prove->add_option("--gens", gen_names, "generator names")->required();
  c_prove->add_option("--rel", rel_strs, "relation `lhs = rhs` (repeatable)");
  c_prove->add_option("--lhs", lhs_str, "")->required();
  c_prove->add_option("--rhs", rhs_str, "")->required();
  c_prove->add_option("--budget", budget, "rewrite depth budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_present->parsed()) {
      Report rep("present", report_file);
      rep.input(in_file);
      TaggedTriangulation T = load_triangulation(in_file, d, n);
      rep.j["d"] = T.d();
      rep.j["n"] = T.n();
      Presentation P = relations_from_quiver(quiver_from_triangulation(T), parse_variant(variant));
      std::string text;
      if (format == "text")
        text = to_text(P);
      else if (format == "algebra")
        text = to_algebra_text(P);
      else if (format == "json") {
        json pj;
        pj["generators"] = P.generators;
        json rels = json::array();
        for (const auto& r : P.relators)
          rels.push_back({{"lhs", word_to_string(r.lhs, P.generators)},
                          {"rhs", word_to_string(r.rhs, P.generators)}});
        pj["relators"] = rels;
        text = pj.dump(2) + "\n";
      } else {
        throw CLI::ValidationError("--format", "must be json, text or algebra");
      }
      write_or_print(out_file, text);
      rep.j["relators"] = P.relators.size();
      rep.write(true);
      return kExitOk;
    }

    if (c_flip->parsed()) {
      Report rep("flip", report_file);
      rep.input(in_file);
      TaggedTriangulation T = load_triangulation(in_file, d, n);
      if (slot < 1 || slot > T.n()) throw CLI::ValidationError("--slot", "out of range");
      TaggedTriangulation T2 = flip(T, slot - 1);
      rep.j["d"] = T.d();
      rep.j["n"] = T.n();
      write_or_print(out_file, to_json(T2).dump(2) + "\n");
      rep.write(true);
      return kExitOk;
    }

    if (c_mutate->parsed()) {
      Report rep("mutate", report_file);
      rep.input(in_file);
      DecoratedQuiver Q;
      if (in_file.empty()) {
        Q = quiver_from_triangulation(initial_triangulation({n, d}));
      } else {
        std::ifstream in(in_file);
        if (!in) throw CLI::ValidationError("--in", "cannot open " + in_file);
        json j;
        in >> j;
        Q = quiver_from_json(j);
      }
      if (vertex < 1 || vertex > Q.n) throw CLI::ValidationError("--vertex", "out of range");
      rep.j["d"] = Q.d;
      rep.j["n"] = Q.n;
      write_or_print(out_file, to_json(mutate(Q, vertex - 1)).dump(2) + "\n");
      rep.write(true);
      return kExitOk;
    }

    if (c_orbit->parsed()) {
      Report rep("orbit", report_file);
      rep.j["d"] = d;
      rep.j["n"] = n;
      FlipGraph g = enumerate_flip_graph({n, d});
      std::cout << "triangulations: " << g.triangulations.size() << "\n"
                << "flip edges: " << g.edges.size() << "\n";
      if (!dot_file.empty()) write_or_print(dot_file, flip_graph_dot(g));
      if (!csv_file.empty()) write_or_print(csv_file, flip_graph_csv(g));
      rep.j["triangulations"] = g.triangulations.size();
      rep.j["edges"] = g.edges.size();
      rep.write(true);
      return kExitOk;
    }

    if (c_vm->parsed()) {
      Report rep("verify-mutation", report_file);
      rep.j["d"] = d;
      rep.j["n"] = n;
      rep.j["seed"] = seed;
      SweepResult r;
      if (exhaustive) {
        FlipGraph g = enumerate_flip_graph({n, d});
        r = verify_mutation_parallel(g.triangulations);
        rep.j["triangulations"] = g.triangulations.size();
      } else {
        r = verify_mutation_walks({n, d}, walks, steps, seed);
      }
      rep.j["checked"] = r.checked;
      rep.j["failures"] = r.failures;
      if (!r.ok()) rep.j["first_failure"] = r.first_failure;
      std::cout << "checked " << r.checked << " flips, failures " << r.failures << "\n";
      rep.write(r.ok());
      return r.ok() ? kExitOk : kExitCheckFailed;
    }

    if (c_nu->parsed()) {
      Report rep("verify-nu", report_file);
      rep.input(in_file);
      TaggedTriangulation T = load_triangulation(in_file, d, n);
      rep.j["d"] = T.d();
      rep.j["n"] = T.n();
      NuCertificate cert = verify_nu(T, reflection_assignment(T, braid_graph(T)), coset_cap());
      rep.j["certificate"] = to_json(cert);
      std::cout << to_json(cert).dump(2) << "\n";
      rep.write(cert.pass());
      return cert.pass() ? kExitOk : kExitCheckFailed;
    }

    if (c_order->parsed()) {
      Report rep("order", report_file);
      rep.input(in_file);
      TaggedTriangulation T = load_triangulation(in_file, d, n);
      rep.j["d"] = T.d();
      rep.j["n"] = T.n();
      Presentation P = relations_from_quiver(quiver_from_triangulation(T), parse_variant(variant));
      CosetTable t = todd_coxeter(P, {}, coset_cap());
      if (t.status == CosetTable::Status::capped) {
        rep.j["capped"] = true;
        std::cout << "capped\n";
        rep.write(false);
        return kExitCapped;
      }
      rep.j["order"] = t.index;
      std::cout << t.index << "\n";
      rep.write(true);
      return kExitOk;
    }

    if (c_index->parsed()) {
      Report rep("index-n", report_file);
      rep.j["d"] = d;
      rep.j["n"] = n;
      Presentation P = reference_presentation(d, n, Reference::artin_b_mod_sd);
      CosetTable t = todd_coxeter(P, n_subgroup_generators(P), coset_cap());
      if (t.status == CosetTable::Status::capped) {
        rep.j["capped"] = true;
        std::cout << "capped\n";
        rep.write(false);
        return kExitCapped;
      }
      rep.j["index"] = t.index;
      rep.j["powers_of_s"] = cosets_are_powers_of(t, 0);
      bool pass = t.index == (size_t)d && cosets_are_powers_of(t, 0);
      std::cout << "index " << t.index << "\n";
      rep.write(pass);
      return pass ? kExitOk : kExitCheckFailed;
    }

    if (c_diag->parsed()) {
      Report rep("diagram-check", report_file);
      rep.j["d"] = d;
      rep.j["n"] = n;
      DiagramReport r = diagram_check(d, n, coset_cap());
      rep.j["relators_die"] = r.relators_die;
      rep.j["generators_match"] = r.generators_match;
      rep.j["image_order"] = r.image_order;
      rep.j["ambient_order"] = r.ambient_order;
      rep.j["index"] = r.index();
      std::cout << (r.pass() ? "pass" : "fail") << ": image " << r.image_order << " ambient "
                << r.ambient_order << " index " << r.index() << "\n";
      rep.write(r.pass());
      return r.pass() ? kExitOk : kExitCheckFailed;
    }

    if (c_ab->parsed()) {
      Report rep("abelianization", report_file);
      rep.input(in_file);
      TaggedTriangulation T = load_triangulation(in_file, d, n);
      rep.j["d"] = T.d();
      rep.j["n"] = T.n();
      Presentation P = relations_from_quiver(quiver_from_triangulation(T), parse_variant(variant));
      Abelianization ab = abelianization(P);
      rep.j["free_rank"] = ab.free_rank;
      rep.j["torsion"] = ab.torsion;
      std::cout << "free rank " << ab.free_rank << ", torsion";
      if (ab.torsion.empty()) std::cout << " none";
      for (long long t : ab.torsion) std::cout << " " << t;
      std::cout << "\n";
      rep.write(true);
      return kExitOk;
    }

    if (c_prove->parsed()) {
      Report rep("prove", report_file);
      Presentation P;
      P.generators = gen_names;
      for (const auto& rs : rel_strs) {
        auto eq = rs.find('=');
        if (eq == std::string::npos)
          throw CLI::ValidationError("--rel", "expected `lhs = rhs`");
        P.relators.push_back({word_from_string(rs.substr(0, eq), P.generators),
                              word_from_string(rs.substr(eq + 1), P.generators)});
      }
      ConsequenceResult r = bounded_consequence(P, word_from_string(lhs_str, P.generators),
                                                word_from_string(rhs_str, P.generators), budget);
      bool proved = r == ConsequenceResult::proved;
      rep.j["result"] = proved ? "proved" : "unknown";
      std::cout << (proved ? "proved" : "unknown") << "\n";
      rep.write(proved);
      return proved ? kExitOk : kExitCheckFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "capped: " << e.what() << "\n";
    return kExitCapped;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
