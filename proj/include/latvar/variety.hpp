#pragma once

#include <string>
#include <vector>

#include "latvar/congruence.hpp"
#include "latvar/lattice.hpp"

namespace latvar {

// A finitely generated lattice variety HSP(generators). The subdirectly
// irreducible members all live in HS(generators) by congruence
// distributivity, so the cache below is complete for membership tests.
struct VarietySpec {
  std::vector<FiniteLattice> generators;
  std::vector<FiniteLattice> si;        // deduped up to isomorphism
  std::vector<std::string> si_keys;     // canonical_form of each entry

  bool has_si_isomorphic_to(const FiniteLattice& l) const;
};

// Con L has a least nonzero congruence (and |L| >= 2).
bool is_subdirectly_irreducible(const FiniteLattice& l);

VarietySpec make_variety(std::vector<FiniteLattice> generators,
                         long visited_cap = 1000000);

bool contains(const VarietySpec& spec, const FiniteLattice& l);

struct MemberSearch {
  std::vector<FiniteLattice> members;  // canonical order, deduped
  bool complete = true;                // false when a cap truncated the scan
  long visited = 0;
};

// All members A (up to iso) with |A| <= max_size, length(A) <= max_length
// and Con A isomorphic to the ideal lattice of s. Searches subdirect
// sublattices of products of SI members indexed by the meet irreducible
// elements of s.
MemberSearch members_with_conc(const VarietySpec& spec,
                               const JoinSemilattice0& s, int max_size,
                               int max_length, long visited_cap = 2000000);

struct SemisimpleReport {
  bool ok = true;
  int counterexample = -1;  // index into spec.si when ok is false
};

SemisimpleReport is_finitely_semisimple(const VarietySpec& spec);

}  // namespace latvar
