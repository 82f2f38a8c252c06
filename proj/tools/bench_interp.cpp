// Compares the serial reference interpolation sweep against the
// OpenMP-parallel one on a shared table, checking that both produce
// identical polynomials.
//
// Usage: bench_interp [K ...]   (defaults: 16 32 48 64)

#include <stirpoly/pk.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<unsigned> ks;
  for (int i = 1; i < argc; ++i) ks.push_back(static_cast<unsigned>(std::stoul(argv[i])));
  if (ks.empty()) ks = {16, 32, 48, 64};

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("interpolation sweep, serial vs parallel (%d threads)\n", threads);
  std::printf("%6s  %10s  %12s  %12s  %8s\n", "K", "table[ms]", "serial[ms]", "parallel[ms]",
              "speedup");

  for (unsigned k : ks) {
    auto t0 = std::chrono::steady_clock::now();
    const stirpoly::StirlingTable table(2 * k + 2);
    const double table_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto serial = stirpoly::interpolate_pk_range_serial(table, k);
    const double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = stirpoly::interpolate_pk_range(table, k);
    const double parallel_ms = ms_since(t0);

    if (serial != parallel) {
      std::fprintf(stderr, "mismatch between serial and parallel sweeps at K = %u\n", k);
      return 1;
    }
    std::printf("%6u  %10.2f  %12.2f  %12.2f  %7.2fx\n", k, table_ms, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
  }
  return 0;
}
