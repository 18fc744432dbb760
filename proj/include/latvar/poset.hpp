// Finite posets, kernels, norm-coverings, and tree coverings.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace latvar {

/// A finite partially ordered set with string element ids and a dense
/// integer index. The full order relation is stored as a matrix; the
/// cover relation is always derived from it, never taken as input
/// without closure.
class FinitePoset {
 public:
  FinitePoset() = default;

  // Builds from a cover list; computes the reflexive-transitive closure
  // and rejects cyclic input.
  static FinitePoset from_covers(
      std::vector<std::string> ids,
      const std::vector<std::pair<std::string, std::string>>& covers);

  // Builds from a full relation matrix; rejects non-orders.
  static FinitePoset from_leq(std::vector<std::string> ids,
                              std::vector<std::vector<char>> leq);

  static FinitePoset chain(int n);      // ids "0".."n-1"
  static FinitePoset antichain(int n);  // ids "0".."n-1"

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int e) const { return ids_[e]; }
  const std::vector<std::string>& ids() const { return ids_; }
  int index_of(const std::string& id) const;  // throws invalid_argument
  bool has_id(const std::string& id) const;

  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool covers(int lo, int hi) const { return cover_[lo][hi] != 0; }

  std::vector<int> upper_covers(int e) const;
  std::vector<int> lower_covers(int e) const;

  std::vector<int> down_set(int e) const;
  std::vector<int> up_set(int e) const;
  std::vector<int> down_set(const std::vector<int>& xs) const;
  std::vector<int> up_set(const std::vector<int>& xs) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;

  // Greatest element of a subset, if it has one.
  std::optional<int> greatest_of(const std::vector<int>& subset) const;

  // Longest chain below / above e, in cover steps.
  int height(int e) const;
  int depth(int e) const;

  // Unique minimum and every principal down-set a chain.
  bool is_tree() const;

  // Deterministic linear extension: repeatedly removes the minimal
  // element with the lexicographically least id.
  std::vector<int> linear_extension() const;

  bool same_order(const FinitePoset& other) const;  // ids ignored

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<char>> cover_;
  std::map<std::string, int> index_;

  void finish_construction();  // derives covers, builds the id index
};

/// A kernel of a poset: a subset V such that every down-set ↓u meets V
/// in a set with a greatest element.
struct Kernel {
  std::vector<int> members;  // sorted, distinct
};

bool is_kernel(const FinitePoset& u, const std::vector<int>& members);
Kernel make_kernel(const FinitePoset& u, std::vector<int> members);

// Greatest element of V ∩ ↓e. Requires V to be a kernel.
int kernel_project(const FinitePoset& u, const Kernel& v, int e);

Kernel kernel_intersection(const FinitePoset& u, const Kernel& v,
                           const Kernel& w);

/// A monotone norm from a poset U onto an index poset I. Every finite
/// poset is supported (U itself is a kernel), so no extra witness is
/// stored.
class NormCovering {
 public:
  NormCovering() = default;
  NormCovering(FinitePoset u, FinitePoset i, std::vector<int> norm);

  const FinitePoset& U() const { return u_; }
  const FinitePoset& I() const { return i_; }
  int norm(int ue) const { return norm_[ue]; }

 private:
  FinitePoset u_;
  FinitePoset i_;
  std::vector<int> norm_;
};

/// A sharp ideal, always principal at this scale; identified by its
/// generator in U.
struct SharpIdeal {
  int generator;
};

// Norm of a sharp ideal: max of the norm over the ideal, attained at
// the generator by monotonicity.
inline int ideal_norm(const NormCovering& nc, const SharpIdeal& si) {
  return nc.norm(si.generator);
}

std::vector<SharpIdeal> sharp_ideals(const NormCovering& nc);
std::vector<SharpIdeal> extreme_ideals(const NormCovering& nc);
bool is_extreme(const NormCovering& nc, int generator);

// Whether v ↦ |v| restricted to extreme ideals below each extreme
// ideal is an order isomorphism onto the corresponding down-set of I.
bool is_tight(const NormCovering& nc);

/// The norm-covering of a tree T built from partial functions on chains
/// of T⁻ with values below a per-node capacity, ordered by extension.
struct TreeCovering {
  NormCovering nc;
  FinitePoset tree;
  std::vector<int> capacity;  // indexed by tree element
  // Per U element: the partial function as sorted (tree elem, value).
  std::vector<std::vector<std::pair<int, int>>> func;

  // U element whose domain is phi(t) = ↓t − {root} with the given
  // values; throws if absent.
  int element_for(const std::vector<std::pair<int, int>>& f) const;
};

TreeCovering build_tree_covering(const FinitePoset& tree,
                                 const std::function<int(int)>& capacity);

/// Result of the sigma selection: for each index element i, the
/// generator of the selected sharp ideal.
struct SigmaSelection {
  std::vector<int> ideal_gen;  // indexed by tree element
};

struct CapacityExhausted {
  int tree_node;
};

// F maps an extreme-ideal generator (U element index) to a subset of U.
// Walks the tree in a deterministic well-founded order and picks, at
// each node, the least value not excluded by F along the branch.
std::variant<SigmaSelection, CapacityExhausted> sigma_select(
    const TreeCovering& tc,
    const std::function<std::vector<int>(int)>& exclusions);

}  // namespace latvar
