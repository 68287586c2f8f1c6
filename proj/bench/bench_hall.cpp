// Benchmark comparing the serial reference kernels with their OpenMP
// counterparts on representative workloads: Hall-subgroup class searches on
// single prime sets, and whole admitting-set family sweeps.  Results must be
// identical between the two policies; the benchmark re-verifies that on every
// row.  Build with the normal toolchain and run build/hall_bench directly;
// this target is deliberately not registered with ctest.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hall/engine.hpp"
#include "hall/lattice.hpp"

using hall::ExecPolicy;
using hall::FiniteGroup;
using hall::PrimeSet;

namespace {

double seconds_of(const std::function<void()>& work) {
  auto start = std::chrono::steady_clock::now();
  work();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

void print_row(const std::string& label, double serial_s, double parallel_s,
               bool identical) {
  std::printf("%-36s %10.3f %10.3f %8.2fx   %s\n", label.c_str(), serial_s,
              parallel_s, parallel_s > 0 ? serial_s / parallel_s : 0.0,
              identical ? "identical" : "MISMATCH");
}

void bench_hall_search(const FiniteGroup& g, const PrimeSet& pi) {
  std::vector<hall::Subgroup> serial_result, parallel_result;
  double serial_s = seconds_of(
      [&] { serial_result = hall::hall_subgroups(g, pi, ExecPolicy::Serial); });
  double parallel_s = seconds_of([&] {
    parallel_result = hall::hall_subgroups(g, pi, ExecPolicy::Parallel);
  });
  bool identical = serial_result.size() == parallel_result.size();
  if (identical)
    for (std::size_t i = 0; i < serial_result.size(); ++i)
      if (serial_result[i].elements != parallel_result[i].elements)
        identical = false;
  print_row("hall " + g.name() + " " + pi.to_string(), serial_s, parallel_s,
            identical);
}

void bench_family(const FiniteGroup& g) {
  hall::PiFamily serial_family, parallel_family;
  double serial_s =
      seconds_of([&] { serial_family = hall::pi_family(g, ExecPolicy::Serial); });
  double parallel_s = seconds_of(
      [&] { parallel_family = hall::pi_family(g, ExecPolicy::Parallel); });
  print_row("family " + g.name(), serial_s, parallel_s,
            serial_family.members == parallel_family.members);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the serial kernel\n");
#endif
  std::printf("%-36s %10s %10s %9s\n", "workload", "serial(s)", "parallel(s)",
              "speedup");

  bench_hall_search(hall::sym(7), PrimeSet::of({2, 3, 5}));
  bench_hall_search(hall::sym(8), PrimeSet::of({2, 3}));
  bench_hall_search(hall::m11(), PrimeSet::of({2, 3, 5}));
  bench_hall_search(hall::psl3(3), PrimeSet::of({2, 3, 13}));
  bench_hall_search(hall::sl2(13), PrimeSet::of({2, 3, 7}));

  bench_family(hall::sym(7));
  bench_family(hall::m11());
  bench_family(hall::psl2(13));
  bench_family(hall::gl2(7));
  return 0;
}
