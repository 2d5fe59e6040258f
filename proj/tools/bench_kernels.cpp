// Compares the parallel interval-DP kernel against the serial reference on
// the same words and reports speedups and growth exponents.
//
// Usage: bench_kernels [length ...]   (default 100 200 400 800)

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graev/harness.hpp"

int main(int argc, char** argv) {
  std::vector<int> lengths;
  for (int i = 1; i < argc; ++i) {
    const int len = std::atoi(argv[i]);
    if (len <= 0) {
      std::fprintf(stderr, "usage: %s [length ...]\n", argv[0]);
      return 2;
    }
    lengths.push_back(len);
  }
  if (lengths.empty()) lengths = {100, 200, 400, 800};

  graev::InstanceConfig config;
  config.seed = 2024;
  config.n_points = 6;
  graev::SplitMix64 rng(config.seed);
  const graev::UltraMetricSpace space = graev::random_space(config, rng);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%8s %12s %12s %9s %8s\n", "length", "parallel_ms",
              "reference_ms", "speedup", "growth");
  const auto rows =
      graev::bench_dp(lengths, space, config.seed, /*include_reference=*/true);
  for (const auto& r : rows) {
    std::printf("%8d %12.2f %12.2f %9.2f %8.2f\n", r.length, r.ms_dp,
                r.ms_reference, r.ms_dp > 0 ? r.ms_reference / r.ms_dp : 0.0,
                r.growth);
  }
  return 0;
}
