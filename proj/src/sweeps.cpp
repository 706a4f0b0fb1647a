#include "orbipres/sweeps.hpp"

#include <random>

namespace orbipres {

namespace {

std::string check_one_mutation(const TaggedTriangulation& T, int k) {
  DecoratedQuiver by_rule = mutate(quiver_from_triangulation(T), k);
  DecoratedQuiver by_flip = quiver_from_triangulation(flip(T, k));
  if (by_rule == by_flip) return {};
  std::string msg = "mutation mismatch at slot " + std::to_string(k + 1) + " of {";
  for (const auto& a : T.arcs) msg += " " + to_string(a);
  return msg + " }";
}

std::string check_one_nu(const TaggedTriangulation& T) {
  BraidGraph g = braid_graph(T);
  ReflectionAssignment assign = reflection_assignment(T, g);
  NuCertificate cert = verify_nu(T, assign);
  if (cert.pass()) return {};
  std::string msg = "nu certificate failed for {";
  for (const auto& a : T.arcs) msg += " " + to_string(a);
  msg += " }: ";
  if (!cert.relators_ok) msg += "relator " + std::to_string(cert.failing_relator);
  msg += " image " + std::to_string(cert.image_order) + " presented " +
         std::to_string(cert.presented_order) + " expected " +
         std::to_string(cert.expected_order);
  return msg;
}

template <typename Fn>
SweepResult run_serial(const std::vector<TaggedTriangulation>& ts, int per, Fn&& check) {
  SweepResult out;
  for (const auto& T : ts)
    for (int k = 0; k < per; ++k) {
      ++out.checked;
      std::string msg = check(T, k);
      if (!msg.empty()) {
        ++out.failures;
        if (out.first_failure.empty()) out.first_failure = msg;
      }
    }
  return out;
}

template <typename Fn>
SweepResult run_parallel(const std::vector<TaggedTriangulation>& ts, int per, Fn&& check) {
  const int total = (int)ts.size() * per;
  std::vector<std::string> msgs(total);
#ifdef ORBIPRES_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int idx = 0; idx < total; ++idx) msgs[idx] = check(ts[idx / per], idx % per);
  SweepResult out;
  out.checked = total;
  for (const auto& m : msgs)
    if (!m.empty()) {
      ++out.failures;
      if (out.first_failure.empty()) out.first_failure = m;
    }
  return out;
}

}  // namespace

SweepResult verify_mutation_serial(const std::vector<TaggedTriangulation>& ts) {
  if (ts.empty()) return {};
  return run_serial(ts, ts[0].n(), check_one_mutation);
}

SweepResult verify_mutation_parallel(const std::vector<TaggedTriangulation>& ts) {
  if (ts.empty()) return {};
  return run_parallel(ts, ts[0].n(), check_one_mutation);
}

SweepResult verify_mutation_walks(const ConeDisk& disk, int walks, int steps, uint64_t seed) {
  SweepResult out;
  TaggedTriangulation t0 = initial_triangulation(disk);
  std::vector<std::string> msgs(walks);
#ifdef ORBIPRES_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int wlk = 0; wlk < walks; ++wlk) {
    std::mt19937_64 rng(seed + (uint64_t)wlk * 0x9e3779b97f4a7c15ull);
    TaggedTriangulation T = t0;
    for (int s = 0; s < steps; ++s) {
      int k = (int)(rng() % disk.n);
      std::string msg = check_one_mutation(T, k);
      if (!msg.empty()) {
        msgs[wlk] = msg;
        break;
      }
      T = flip(T, k);
    }
  }
  out.checked = (size_t)walks * steps;
  for (const auto& m : msgs)
    if (!m.empty()) {
      ++out.failures;
      if (out.first_failure.empty()) out.first_failure = m;
    }
  return out;
}

SweepResult verify_nu_serial(const std::vector<TaggedTriangulation>& ts) {
  return run_serial(ts, 1, [](const TaggedTriangulation& T, int) { return check_one_nu(T); });
}

SweepResult verify_nu_parallel(const std::vector<TaggedTriangulation>& ts) {
  return run_parallel(ts, 1, [](const TaggedTriangulation& T, int) { return check_one_nu(T); });
}

}  // namespace orbipres
