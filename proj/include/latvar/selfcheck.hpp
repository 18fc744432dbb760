// Deterministic verification suites: the exact fixture computations and
// the seeded randomized property checks, shared by the acceptance runner
// and the command line front end.
#pragma once

#include <string>
#include <vector>

#include "latvar/lattice.hpp"

namespace latvar {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // counts, timings, or the first failure
};

// Randomized suites; seeds are fixed by the caller so runs are
// reproducible. Each returns after `cases` successful checks or at the
// first failure.
CheckResult check_con_distributive(int cases, unsigned seed);
CheckResult check_malcev_oracle(int cases, unsigned seed);
CheckResult check_kernel_intersection(int cases, unsigned seed);
CheckResult check_condensate_laws(int cases, unsigned seed);
CheckResult check_tau_quasi_lifting(int cases, unsigned seed);
CheckResult check_conc_surjectivity(int cases, unsigned seed);

// Random lattice source for the suites: sublattices of the lattice of
// partitions of an n-set, which realize every small lattice shape.
FiniteLattice partition_lattice(int n);

struct ReproduceOptions {
  // generators of the two varieties; defaults are the bundled fixtures
  std::vector<FiniteLattice> generators1;
  std::vector<FiniteLattice> generators2;
  int property_cases = 200;
  unsigned seed = 20260826;
};

// The eight acceptance steps, in order; each entry reports pass or fail
// with a short account of what was computed.
std::vector<CheckResult> reproduce_all(const ReproduceOptions& opt = {});

}  // namespace latvar
