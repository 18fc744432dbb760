// Compares the parallel kernels against their serial references.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "latvar/congruence.hpp"
#include "latvar/fixtures.hpp"
#include "latvar/selfcheck.hpp"

using namespace latvar;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    double t0 = now();
    f();
    best = std::min(best, now() - t0);
  }
  return best;
}

void run(const char* label, const FiniteLattice& l, int reps) {
  double table_par = time_best_of(reps, [&] { principal_table(l); });
  double table_ser = time_best_of(reps, [&] { principal_table_serial(l); });
  double law_par = time_best_of(reps, [&] {
    is_modular(l);
    is_distributive(l);
  });
  double law_ser = time_best_of(reps, [&] {
    is_modular_serial(l);
    is_distributive_serial(l);
  });
  std::printf("%-22s n=%-3d  principal %8.3f ms / %8.3f ms (x%.2f)"
              "   laws %8.3f ms / %8.3f ms (x%.2f)\n",
              label, l.size(), table_par * 1e3, table_ser * 1e3,
              table_ser / table_par, law_par * 1e3, law_ser * 1e3,
              law_ser / law_par);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("%-22s %-6s %s\n", "lattice", "",
              "parallel / serial, best of several runs");
  run("largest fixture", fixture_t1(), 5);
  run("cube^2", direct_product({FiniteLattice::boolean_lattice(3),
                                FiniteLattice::boolean_lattice(3)}), 3);
  run("partitions of 5", partition_lattice(5), 3);
  return 0;
}
