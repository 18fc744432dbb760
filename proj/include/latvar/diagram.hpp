#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latvar/congruence.hpp"
#include "latvar/lattice.hpp"
#include "latvar/variety.hpp"

namespace latvar {

// A functor from a finite index poset into (∨,0)-semilattices. Edges are
// stored for every comparable pair; the constructor checks identities and
// path independence exhaustively.
class SemDiagram {
 public:
  SemDiagram(FinitePoset index, std::vector<JoinSemilattice0> nodes,
             std::map<std::pair<int, int>, std::vector<int>> edges);
  // Cover edges only; composites are derived and cross-checked.
  static SemDiagram from_covers(
      FinitePoset index, std::vector<JoinSemilattice0> nodes,
      const std::map<std::pair<int, int>, std::vector<int>>& cover_edges);

  const FinitePoset& index() const { return index_; }
  const JoinSemilattice0& node(int i) const { return nodes_[i]; }
  const std::vector<int>& edge(int i, int j) const;
  Join0Hom edge_hom(int i, int j) const;

  // Induced diagram on a lower subset of the index.
  SemDiagram restrict(const std::vector<int>& lower_subset) const;

 private:
  FinitePoset index_;
  std::vector<JoinSemilattice0> nodes_;
  std::map<std::pair<int, int>, std::vector<int>> edges_;
};

class LatDiagram {
 public:
  LatDiagram(FinitePoset index, std::vector<FiniteLattice> nodes,
             std::map<std::pair<int, int>, std::vector<int>> edges);
  static LatDiagram from_covers(
      FinitePoset index, std::vector<FiniteLattice> nodes,
      const std::map<std::pair<int, int>, std::vector<int>>& cover_edges);

  const FinitePoset& index() const { return index_; }
  const FiniteLattice& node(int i) const { return nodes_[i]; }
  const std::vector<int>& edge(int i, int j) const;
  LatticeHom edge_hom(int i, int j) const;

  LatDiagram restrict(const std::vector<int>& lower_subset) const;

 private:
  FinitePoset index_;
  std::vector<FiniteLattice> nodes_;
  std::map<std::pair<int, int>, std::vector<int>> edges_;
};

// The congruence functor applied nodewise; keeps the congruence lattices
// so callers can interpret the node elements.
struct ConcDiagram {
  SemDiagram diagram;
  std::vector<ConLattice> cons;
};

ConcDiagram apply_conc(const LatDiagram& a);

struct NaturalIso {
  std::vector<std::vector<int>> maps;  // per node
};

std::optional<NaturalIso> natural_iso(const SemDiagram& d1,
                                      const SemDiagram& d2);

// natural_iso(apply_conc(a), d)
std::optional<NaturalIso> verify_lifting(const LatDiagram& a,
                                         const SemDiagram& d);

struct LiftBounds {
  int max_size = 12;
  int max_length = 4;
  long visited_cap = 2000000;
};

struct NonLiftingCertificate {
  std::string bounds;               // human-readable search bounds
  std::vector<std::string> trace;   // one entry per refuted case
  bool search_complete = true;
};

struct LiftSearchResult {
  std::optional<LatDiagram> lifting;
  std::optional<NaturalIso> witness;
  NonLiftingCertificate certificate;  // meaningful when no lifting found
};

// Exhaustive search over per-node candidate pools (default pools from
// members_with_conc) and connecting homomorphisms.
LiftSearchResult bounded_lift_search(
    const SemDiagram& d, const VarietySpec& spec, const LiftBounds& bounds,
    const std::vector<std::vector<FiniteLattice>>* pools = nullptr);

// Candidate pool drawn from HS(generators): quotients of sublattices of the
// generators whose congruence lattice matches the target node, up to iso.
// Cheaper than the subdirect-product search and sufficient whenever the
// sought lifting lives inside a generator.
std::vector<FiniteLattice> pool_from_hs(const VarietySpec& spec,
                                        const JoinSemilattice0& target,
                                        const LiftBounds& bounds);

struct CertificateFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Replays the exclusion argument showing the two-by-two square diagram of
// boolean semilattices has no lifting in the variety generated by the three
// 12-element fixtures. Throws CertificateFailure if any recomputed
// enumeration disagrees with the expected one.
NonLiftingCertificate section7_certificate(const VarietySpec& spec2);

// The square index 0 < 1,2 < 3 with nodes 2^4, 2^2, 2^2, 2 and the two
// pairing surjections on the legs.
SemDiagram square_boolean_diagram();

// The lattice square S0 into S1,S2 into T1 by inclusions.
LatDiagram fixture_square_diagram();

struct SubdiagramReport {
  bool coherent = true;
  std::vector<std::string> checked;  // one line per lower subset
};

SubdiagramReport finite_subdiagram_consistency(const SemDiagram& d,
                                               const VarietySpec& spec,
                                               const LiftBounds& bounds);

}  // namespace latvar
