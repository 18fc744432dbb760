#include "latvar/variety.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace latvar {

bool is_subdirectly_irreducible(const FiniteLattice& l) {
  if (l.size() < 2) return false;
  // A least nonzero congruence exists iff Con L has exactly one atom.
  auto con = con_lattice(l);
  return atoms(con.lattice).size() == 1;
}

bool VarietySpec::has_si_isomorphic_to(const FiniteLattice& l) const {
  auto key = canonical_form(l);
  return std::find(si_keys.begin(), si_keys.end(), key) != si_keys.end();
}

VarietySpec make_variety(std::vector<FiniteLattice> generators,
                         long visited_cap) {
  VarietySpec spec;
  spec.generators = std::move(generators);

  std::map<std::string, FiniteLattice> found;
  for (const auto& g : spec.generators) {
    for (const auto& subset : all_sublattices(g, 2, g.size(), visited_cap)) {
      auto sub = sublattice_on(g, subset);
      auto con = con_lattice(sub);
      for (const auto& theta : con.congruences) {
        if (theta.num_blocks < 2) continue;
        auto q = quotient(sub, theta).lattice;
        if (!is_subdirectly_irreducible(q)) continue;
        auto key = canonical_form(q);
        found.emplace(key, q);
      }
    }
  }
  for (auto& [key, l] : found) {
    spec.si.push_back(std::move(l));
    spec.si_keys.push_back(key);
  }
  // Canonical order: by size, then canonical key.
  std::vector<int> order(spec.si.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (spec.si[a].size() != spec.si[b].size()) {
      return spec.si[a].size() < spec.si[b].size();
    }
    return spec.si_keys[a] < spec.si_keys[b];
  });
  VarietySpec sorted;
  sorted.generators = std::move(spec.generators);
  for (int i : order) {
    sorted.si.push_back(std::move(spec.si[i]));
    sorted.si_keys.push_back(std::move(spec.si_keys[i]));
  }
  return sorted;
}

bool contains(const VarietySpec& spec, const FiniteLattice& l) {
  if (l.size() < 2) return true;
  auto con = con_lattice(l);
  for (int t : meet_irreducible(con)) {
    auto q = quotient(l, con.congruences[t]).lattice;
    if (!spec.has_si_isomorphic_to(q)) return false;
  }
  return true;
}

namespace {

// Subdirect sublattices of the product of the given factors, up to
// max_size elements. Surjectivity onto every factor is required; the
// per-coordinate slack prune discards subsets that can no longer reach it.
void subdirect_sublattices(const std::vector<FiniteLattice>& factors,
                           int max_size, long visited_cap, long& visited,
                           bool& complete,
                           std::vector<std::vector<int>>& out) {
  auto product = direct_product(factors);
  const int n = product.size();
  const int nf = static_cast<int>(factors.size());

  // coordinate value of product element e in factor k
  std::vector<std::vector<int>> coord(n, std::vector<int>(nf));
  for (int e = 0; e < n; ++e) {
    long r = e;
    for (int k = nf; k-- > 0;) {
      coord[e][k] = static_cast<int>(r % factors[k].size());
      r /= factors[k].size();
    }
  }

  auto admissible = [&](const std::vector<int>& subset) {
    for (int k = 0; k < nf; ++k) {
      std::set<int> vals;
      for (int e : subset) vals.insert(coord[e][k]);
      int missing = factors[k].size() - static_cast<int>(vals.size());
      if (static_cast<int>(subset.size()) + missing > max_size) return false;
    }
    return true;
  };
  auto subdirect = [&](const std::vector<int>& subset) {
    for (int k = 0; k < nf; ++k) {
      std::set<int> vals;
      for (int e : subset) vals.insert(coord[e][k]);
      if (static_cast<int>(vals.size()) != factors[k].size()) return false;
    }
    return true;
  };

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  auto seed = generated_subset(product, {product.bottom(), product.top()});
  if (static_cast<int>(seed.size()) <= max_size && admissible(seed)) {
    seen.insert(seed);
    frontier.push_back(seed);
  }
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    if (++visited > visited_cap) {
      complete = false;
      return;
    }
    if (subdirect(cur)) out.push_back(cur);
    for (int e = 0; e < n; ++e) {
      if (std::binary_search(cur.begin(), cur.end(), e)) continue;
      auto g = cur;
      g.push_back(e);
      auto c = generated_subset(product, g);
      if (static_cast<int>(c.size()) > max_size || !admissible(c)) continue;
      if (seen.insert(c).second) frontier.push_back(c);
    }
  }
}

}  // namespace

MemberSearch members_with_conc(const VarietySpec& spec,
                               const JoinSemilattice0& s, int max_size,
                               int max_length, long visited_cap) {
  MemberSearch result;
  // Ideals of a finite join-semilattice with zero are principal, so the
  // target congruence lattice is s itself, viewed as a lattice.
  auto target = FiniteLattice::validate(s.poset());

  if (target.size() == 1) {
    result.members.push_back(FiniteLattice::chain(1));
    return result;
  }

  auto mi = meet_irreducible_elements(target);
  const int nf = static_cast<int>(mi.size());

  // Factor pools: SI members whose congruence lattice matches the up-set
  // of the corresponding meet irreducible.
  std::vector<std::vector<int>> pools(nf);
  for (int k = 0; k < nf; ++k) {
    auto upper = sublattice_on(target, target.poset().up_set(mi[k]));
    for (size_t i = 0; i < spec.si.size(); ++i) {
      const auto& b = spec.si[i];
      if (b.size() > max_size || length(b) > max_length) continue;
      if (find_isomorphism(con_lattice(b).lattice, upper)) {
        pools[k].push_back(static_cast<int>(i));
      }
    }
  }

  std::map<std::string, FiniteLattice> found;
  std::vector<int> choice(nf, 0);
  std::function<void(int)> combos = [&](int k) {
    if (!result.complete) return;
    if (k == nf) {
      std::vector<FiniteLattice> factors;
      long prod = 1;
      int len = 0;
      for (int j = 0; j < nf; ++j) {
        factors.push_back(spec.si[choice[j]]);
        prod *= factors.back().size();
        len += length(factors.back());
      }
      if (prod > 100000) {
        result.complete = false;
        return;
      }
      std::vector<std::vector<int>> subs;
      subdirect_sublattices(factors, max_size, visited_cap, result.visited,
                            result.complete, subs);
      auto product = direct_product(factors);
      for (const auto& subset : subs) {
        auto a = sublattice_on(product, subset);
        if (length(a) > max_length) continue;
        if (!find_isomorphism(con_lattice(a).lattice, target)) continue;
        if (!contains(spec, a)) continue;
        found.emplace(canonical_form(a), a);
      }
      return;
    }
    for (int i : pools[k]) {
      choice[k] = i;
      combos(k + 1);
    }
  };
  combos(0);

  for (auto& [key, l] : found) result.members.push_back(std::move(l));
  std::sort(result.members.begin(), result.members.end(),
            [](const FiniteLattice& a, const FiniteLattice& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return canonical_form(a) < canonical_form(b);
            });
  return result;
}

SemisimpleReport is_finitely_semisimple(const VarietySpec& spec) {
  SemisimpleReport r;
  for (size_t i = 0; i < spec.si.size(); ++i) {
    if (!is_simple(spec.si[i])) {
      r.ok = false;
      r.counterexample = static_cast<int>(i);
      return r;
    }
  }
  return r;
}

}  // namespace latvar
