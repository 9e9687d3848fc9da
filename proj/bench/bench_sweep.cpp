// Compares the serial reference sweep against the OpenMP fan-out on the
// same level range and checks that they agree.
//
// Usage: bench_sweep [a_max] [repeats]   (defaults: 150 3)

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "strata/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double best_seconds(int repeats, F&& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (elapsed.count() < best) best = elapsed.count();
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t a_max = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 150;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: not available (parallel path degrades to serial)\n");
#endif
  std::printf("sweep: invariant table for a in [2, %llu], best of %d runs\n",
              static_cast<unsigned long long>(a_max), repeats);

  std::vector<strata::sweep::TableRow> serial_rows, parallel_rows;
  const double serial = best_seconds(repeats, [&] {
    serial_rows = strata::sweep::invariant_table_serial(2, a_max);
  });
  const double parallel = best_seconds(repeats, [&] {
    parallel_rows = strata::sweep::invariant_table_parallel(2, a_max);
  });

  if (serial_rows != parallel_rows) {
    std::printf("MISMATCH: serial and parallel sweeps disagree\n");
    return 1;
  }
  std::printf("serial:   %.3f s\n", serial);
  std::printf("parallel: %.3f s\n", parallel);
  std::printf("speedup:  %.2fx (results identical)\n", serial / parallel);
  return 0;
}
