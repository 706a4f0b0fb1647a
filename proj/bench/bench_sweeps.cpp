// Compares the serial reference kernels against their OpenMP twins and
// checks that both report identical results.
#include <chrono>
#include <cstdio>

#include "orbipres/surface.hpp"
#include "orbipres/sweeps.hpp"

using namespace orbipres;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename Fn>
double time_ms(Fn&& fn, SweepResult& out) {
  auto t0 = clock_type::now();
  out = fn();
  auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench(const char* name, const std::vector<TaggedTriangulation>& ts,
           SweepResult (*serial)(const std::vector<TaggedTriangulation>&),
           SweepResult (*parallel)(const std::vector<TaggedTriangulation>&)) {
  SweepResult rs, rp;
  double ts_ms = time_ms([&] { return serial(ts); }, rs);
  double tp_ms = time_ms([&] { return parallel(ts); }, rp);
  bool same = rs.checked == rp.checked && rs.failures == rp.failures;
  std::printf("%-18s %6zu checks  serial %8.1f ms  parallel %8.1f ms  x%.2f  %s\n", name,
              rs.checked, ts_ms, tp_ms, ts_ms / (tp_ms > 0 ? tp_ms : 1e-9),
              same && rs.ok() ? "ok" : "MISMATCH");
}

}  // namespace

int main() {
  FlipGraph g4 = enumerate_flip_graph({4, 3});
  FlipGraph g5 = enumerate_flip_graph({5, 2});
  bench("verify-mutation n4", g4.triangulations, verify_mutation_serial,
        verify_mutation_parallel);
  bench("verify-mutation n5", g5.triangulations, verify_mutation_serial,
        verify_mutation_parallel);
  bench("verify-nu n4", g4.triangulations, verify_nu_serial, verify_nu_parallel);
  return 0;
}
