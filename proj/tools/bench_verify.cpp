// Times the full verification suite with one thread and with all available
// threads, reporting the speedup of the parallel sweeps.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bsp/verify.hpp"

namespace {

double runOnce(const bsp::VerifyOptions& opt, int* failures) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = bsp::runVerifySuite(opt);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  *failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++*failures;
  return seconds;
}

}  // namespace

int main(int argc, char** argv) {
  bsp::VerifyOptions opt;
  opt.grid = bsp::defaultGrid();
  opt.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;

  std::printf("verification suite benchmark (seed %llu)\n",
              static_cast<unsigned long long>(opt.seed));

#ifdef _OPENMP
  const int maxThreads = omp_get_max_threads();
  int failSerial = 0;
  omp_set_num_threads(1);
  const double serial = runOnce(opt, &failSerial);
  std::printf("  1 thread : %7.3f s, %d failing check(s)\n", serial, failSerial);

  int failParallel = 0;
  omp_set_num_threads(maxThreads);
  const double parallel = runOnce(opt, &failParallel);
  std::printf("  %d threads: %7.3f s, %d failing check(s)\n", maxThreads, parallel,
              failParallel);
  std::printf("  speedup  : %5.2fx\n", serial / parallel);
  return (failSerial || failParallel) ? 1 : 0;
#else
  int failures = 0;
  const double seconds = runOnce(opt, &failures);
  std::printf("  (built without OpenMP) %7.3f s, %d failing check(s)\n", seconds,
              failures);
  return failures ? 1 : 0;
#endif
}
