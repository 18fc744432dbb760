#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latvar/lattice.hpp"

namespace latvar {

// A congruence as a normalized partition: block[e] is the block index of
// element e, blocks numbered by first occurrence. Ordering is refinement.
struct Congruence {
  std::vector<int> block;
  int num_blocks = 0;

  bool operator==(const Congruence& o) const { return block == o.block; }
  bool operator<(const Congruence& o) const { return block < o.block; }
  bool same(int a, int b) const { return block[a] == block[b]; }
};

Congruence normalize_partition(std::vector<int> block);
Congruence congruence_identity(const FiniteLattice& l);
Congruence congruence_full(const FiniteLattice& l);
bool is_congruence(const FiniteLattice& l, const Congruence& c);

bool con_leq(const Congruence& fine, const Congruence& coarse);
Congruence con_meet(const Congruence& a, const Congruence& b);
// Join inside Con L: transitive closure of the union is already a
// congruence when both arguments are congruences.
Congruence con_join(const FiniteLattice& l, const Congruence& a,
                    const Congruence& b);

Congruence principal_congruence(const FiniteLattice& l, int a, int b);
// Least congruence collapsing every listed pair.
Congruence congruence_generated(const FiniteLattice& l,
                                const std::vector<std::pair<int, int>>& pairs);

// Principal congruences for all element pairs, indexed a*n+b.
std::vector<Congruence> principal_table(const FiniteLattice& l);
std::vector<Congruence> principal_table_serial(const FiniteLattice& l);

struct ConLattice {
  FiniteLattice carrier;
  std::vector<Congruence> congruences;  // canonical (lex) order
  FiniteLattice lattice;                // Con L as a lattice, ids "c<k>"

  int size() const { return static_cast<int>(congruences.size()); }
  int index_of(const Congruence& c) const;
  JoinSemilattice0 semilattice() const { return JoinSemilattice0::of(lattice); }
};

ConLattice con_lattice(const FiniteLattice& l, long cap = 65536);
bool is_simple(const FiniteLattice& l);

struct QuotientLattice {
  FiniteLattice lattice;
  std::vector<int> projection;  // element of L -> element of quotient
};

QuotientLattice quotient(const FiniteLattice& l, const Congruence& theta);

// Con f: Con A -> Con B, alpha |-> congruence generated by f x f (alpha).
Join0Hom con_of_hom(const LatticeHom& f, const ConLattice& con_a,
                    const ConLattice& con_b);

struct MalcevStep {
  int from, to;
  std::pair<int, int> generator;          // the premise pair used
  std::vector<std::pair<char, int>> ops;  // ('m'|'j', parameter), outermost last
};

struct MalcevWitness {
  std::vector<int> chain;  // chain.front() = x, chain.back() = y
  std::vector<MalcevStep> steps;
};

// Witness that (x,y) is in the join of the principal congruences of `pairs`,
// or nullopt if it is not.
std::optional<MalcevWitness> malcev_entailment(
    const FiniteLattice& l, std::pair<int, int> xy,
    const std::vector<std::pair<int, int>>& pairs);

// Indices of the completely meet-irreducible congruences (unique upper cover).
std::vector<int> meet_irreducible(const ConLattice& con);

struct BooleanDecomposition {
  bool hypothesis_ok = false;  // every quotient by a member of q is simple
  int failed_theta = -1;       // witness when hypothesis_ok is false
  std::vector<int> q;          // meet-irreducibles not above alpha
  bool is_isomorphism = false;
  // canonical map: per congruence of L, (index in Con(L/alpha), indices in
  // Con(L/theta) for theta in q)
  std::vector<std::vector<int>> map;
};

BooleanDecomposition boolean_decomposition(const FiniteLattice& l,
                                           const Congruence& alpha);

std::string congruence_to_string(const FiniteLattice& l, const Congruence& c);

}  // namespace latvar
