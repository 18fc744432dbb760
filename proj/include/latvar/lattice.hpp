#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latvar/poset.hpp"

namespace latvar {

struct NotALattice : std::invalid_argument {
  int a, b;
  bool missing_meet;
  NotALattice(const std::string& msg, int a_, int b_, bool meet_)
      : std::invalid_argument(msg), a(a_), b(b_), missing_meet(meet_) {}
};

struct ResourceExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FiniteLattice {
 public:
  // Throws NotALattice if some pair lacks a meet or join.
  static FiniteLattice validate(const FinitePoset& p);
  static FiniteLattice from_covers(
      std::vector<std::string> ids,
      const std::vector<std::pair<std::string, std::string>>& covers);
  static FiniteLattice chain(int n);
  static FiniteLattice boolean_lattice(int n);
  static FiniteLattice m_n(int n);  // length-2 lattice with n atoms

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& id(int e) const { return poset_.id(e); }
  int index_of(const std::string& id) const { return poset_.index_of(id); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }

  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int meet(const std::vector<int>& xs) const;
  int join(const std::vector<int>& xs) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  FinitePoset poset_;
  std::vector<std::vector<int>> meet_, join_;
  int bottom_ = 0, top_ = 0;
};

class JoinSemilattice0 {
 public:
  // Requires every pair to have a join and a least element to exist.
  static JoinSemilattice0 validate(const FinitePoset& p);
  static JoinSemilattice0 of(const FiniteLattice& l);

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& id(int e) const { return poset_.id(e); }
  int index_of(const std::string& id) const { return poset_.index_of(id); }
  bool leq(int a, int b) const { return poset_.leq(a, b); }
  int join(int a, int b) const { return join_[a][b]; }
  int zero() const { return zero_; }

 private:
  FinitePoset poset_;
  std::vector<std::vector<int>> join_;
  int zero_ = 0;
};

struct LatticeHom {
  FiniteLattice source, target;
  std::vector<int> map;  // source element -> target element

  LatticeHom(FiniteLattice s, FiniteLattice t, std::vector<int> m);
  static LatticeHom identity(const FiniteLattice& l);
  int operator()(int e) const { return map[e]; }
  bool is_injective() const;
  bool is_surjective() const;
  bool preserves_bounds() const;
};

LatticeHom compose(const LatticeHom& g, const LatticeHom& f);

struct Join0Hom {
  JoinSemilattice0 source, target;
  std::vector<int> map;

  Join0Hom(JoinSemilattice0 s, JoinSemilattice0 t, std::vector<int> m);
  static Join0Hom identity(const JoinSemilattice0& s);
  int operator()(int e) const { return map[e]; }
  bool is_injective() const;
  bool is_surjective() const;
  // 0 separation: only 0 maps to 0.
  bool separates_zero() const;
};

Join0Hom compose(const Join0Hom& g, const Join0Hom& f);

int length(const FiniteLattice& l);
int length(const JoinSemilattice0& s);
std::vector<int> atoms(const FiniteLattice& l);

bool is_modular(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);
bool is_modular_serial(const FiniteLattice& l);
bool is_distributive_serial(const FiniteLattice& l);

// Least meet-and-join-closed subset containing x; sorted element indices.
std::vector<int> generated_subset(const FiniteLattice& l,
                                  const std::vector<int>& x);
// The induced lattice on a closed subset (ids preserved).
FiniteLattice sublattice_on(const FiniteLattice& l,
                            const std::vector<int>& subset);
FiniteLattice generated_sublattice(const FiniteLattice& l,
                                   const std::vector<int>& x);

// All nonempty closed subsets with min_size <= |S| <= max_size, sorted.
// visited_cap bounds the search; exceeding it throws ResourceExhausted.
std::vector<std::vector<int>> all_sublattices(const FiniteLattice& l,
                                              int min_size, int max_size,
                                              long visited_cap = 1000000);
std::vector<std::vector<int>> maximal_sublattices(const FiniteLattice& l,
                                                  long visited_cap = 1000000);

std::vector<int> doubly_irreducible(const FiniteLattice& l);
std::vector<int> join_irreducible(const FiniteLattice& l);
std::vector<int> meet_irreducible_elements(const FiniteLattice& l);

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& l1,
                                                 const FiniteLattice& l2);
std::vector<LatticeHom> find_embeddings(const FiniteLattice& l1,
                                        const FiniteLattice& l2,
                                        size_t max_count = SIZE_MAX);
std::optional<std::vector<int>> find_isomorphism(const JoinSemilattice0& s1,
                                                 const JoinSemilattice0& s2);

FiniteLattice direct_product(const std::vector<FiniteLattice>& factors);

// Label-independent key: two lattices have equal keys iff isomorphic.
std::string canonical_form(const FiniteLattice& l);

// All lattice homomorphisms between small lattices (backtracking).
std::vector<LatticeHom> all_lattice_homs(const FiniteLattice& l1,
                                         const FiniteLattice& l2,
                                         size_t max_count = SIZE_MAX);
std::vector<Join0Hom> all_join0_homs(const JoinSemilattice0& s1,
                                     const JoinSemilattice0& s2,
                                     size_t max_count = SIZE_MAX);

}  // namespace latvar
