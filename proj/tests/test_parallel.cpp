#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <random>

#include "latvar/congruence.hpp"
#include "latvar/fixtures.hpp"
#include "latvar/selfcheck.hpp"

using namespace latvar;

namespace {

std::vector<FiniteLattice> sample_lattices() {
  std::vector<FiniteLattice> out = {fixture_t1(), fixture_t4(), fixture_s0(),
                                    fixture_s1(), partition_lattice(4),
                                    FiniteLattice::boolean_lattice(3)};
  auto p5 = partition_lattice(5);
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> pick(0, p5.size() - 1);
  for (int k = 0; k < 6; ++k) {
    out.push_back(generated_sublattice(p5, {pick(rng), pick(rng), pick(rng)}));
  }
  out.push_back(p5);
  return out;
}

}  // namespace

TEST_CASE("parallel principal tables match the serial reference") {
  for (const auto& l : sample_lattices()) {
    auto parallel = principal_table(l);
    auto serial = principal_table_serial(l);
    REQUIRE(parallel.size() == serial.size());
    for (size_t k = 0; k < parallel.size(); ++k) {
      CHECK(parallel[k] == serial[k]);
    }
  }
}

TEST_CASE("parallel law checks match the serial reference") {
  for (const auto& l : sample_lattices()) {
    CHECK(is_modular(l) == is_modular_serial(l));
    CHECK(is_distributive(l) == is_distributive_serial(l));
  }
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
  auto l = partition_lattice(5);
  auto reference = principal_table_serial(l);
  int saved = omp_get_max_threads();
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    CHECK(principal_table(l) == reference);
    CHECK(is_modular(l) == is_modular_serial(l));
    CHECK(is_distributive(l) == is_distributive_serial(l));
  }
  omp_set_num_threads(saved);
}
#endif
