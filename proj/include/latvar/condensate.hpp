#pragma once

#include <map>
#include <string>
#include <vector>

#include "latvar/congruence.hpp"
#include "latvar/diagram.hpp"
#include "latvar/poset.hpp"

namespace latvar {

// An element of the condensate: one value per covering element, plus a
// kernel the element is declared to be supported by.
struct CondElement {
  std::vector<int> values;  // indexed by U elements
  Kernel declared_support;
};

// The condensate of a semilattice diagram over a finite norm-covering.
// Elements are tuples a with a_u in node(|u|); a kernel V supports a
// when every coordinate is determined by the coordinates over V through
// the diagram edges. For finite U the carrier is the full product (U
// itself supports everything), so the carrier is never materialized;
// the support structure is what the operations act on.
class Condensate {
 public:
  Condensate(NormCovering nc, SemDiagram d);

  const NormCovering& covering() const { return nc_; }
  const SemDiagram& diagram() const { return d_; }
  const JoinSemilattice0& node_at(int u) const {
    return d_.node(nc_.norm(u));
  }

  bool is_support(const std::vector<int>& values, const Kernel& v) const;

  std::vector<int> join(const std::vector<int>& a,
                        const std::vector<int>& b) const;
  std::vector<int> zero() const;
  bool leq(const std::vector<int>& a, const std::vector<int>& b) const;

  // All elements supported by V, i.e. the extensions of the tuples over
  // V. Size is the product of the node sizes over V.
  std::vector<std::vector<int>> supported_by(const Kernel& v) const;

 private:
  NormCovering nc_;
  SemDiagram d_;
};

// Extends a tuple over V to the whole covering through the edges; the
// inverse of restriction to V.
CondElement cond_from_restriction(const Condensate& c, const Kernel& v,
                                  const std::map<int, int>& x);

// The least kernel supporting a, found by exhaustive sub-kernel search
// inside the declared support. The minimum is unique because supports
// are closed under kernel intersection; this is asserted, not assumed.
Kernel smallest_support(const Condensate& c, const CondElement& a);

int proj_at(const Condensate& c, const CondElement& a, int u);
// Projection at a sharp ideal: push the coordinate at the kernel
// projection of the generator up along the edge. Independent of the
// choice of support.
int proj_ideal(const Condensate& c, const CondElement& a,
               const SharpIdeal& si, const Kernel& support);
int proj_ideal(const Condensate& c, const CondElement& a,
               const SharpIdeal& si);  // uses the declared support

// The ideal {a : proj_ideal(a, si) = 0}; principal, so carried by its
// top. Construction checks join closure on the up-set and that
// b |-> proj at si is an order isomorphism from the up-set of top onto
// node(|si|).
struct ThetaIdeal {
  SharpIdeal at;
  std::vector<int> top;
  bool contains(const Condensate& c, const CondElement& a) const;
};

ThetaIdeal theta_ideal(const Condensate& c, const SharpIdeal& si);

// A natural transformation between two diagrams over the same index
// poset; maps[i] sends node(i) of the source to node(i) of the target.
struct NatTransform {
  std::vector<std::vector<int>> maps;
};

// Throws invalid_argument unless every square over a comparable pair
// commutes.
void check_natural(const SemDiagram& src, const SemDiagram& dst,
                   const NatTransform& h);

// Coordinatewise action of a natural transformation; preserves supports.
CondElement cond_map(const Condensate& src, const Condensate& dst,
                     const NatTransform& h, const CondElement& a);

struct QuasiLiftingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuasiLiftingReport {
  bool ok = true;
  std::vector<std::string> checked;  // one line per extreme ideal
};

// The map from congruences of the condensate of a lattice diagram to
// the condensate of its congruence diagram. Congruences of the product
// are represented as tuples of coordinate congruences; tuples are
// indexed by U with values indexing cons[|u|].congruences.
struct TauMap {
  Condensate target;                  // condensate of the Con diagram
  std::vector<ConLattice> node_cons;  // per index-poset node

  // beta: per-U-element congruence indices of the source condensate
  // under the product decomposition; the image in the target.
  std::vector<int> operator()(const std::vector<int>& beta) const;

  // kernel of the canonical projection at u, as a congruence tuple
  std::vector<int> projection_kernel(int u) const;

  QuasiLiftingReport report;
};

// Builds the map and checks, at every extreme ideal with generator u:
// the join of {beta : tau(beta) in theta} equals the projection kernel
// at u, and beta |-> tau(beta) v top(theta) is an order isomorphism
// from the up-set of that join onto the up-set of top(theta). When the
// product of the node sizes is at most verify_cap, additionally
// materializes the product lattice and checks that the decomposition
// of its congruence lattice into coordinate congruences is a lattice
// isomorphism. Failures throw QuasiLiftingFailure.
TauMap tau_map(const LatDiagram& a, const NormCovering& nc,
               long verify_cap = 100);

}  // namespace latvar
