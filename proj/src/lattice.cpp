#include "latvar/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latvar {

namespace {

// Greatest lower bound of a,b in p, or -1.
int glb(const FinitePoset& p, int a, int b) {
  std::vector<int> lower;
  for (int c = 0; c < p.size(); ++c) {
    if (p.leq(c, a) && p.leq(c, b)) lower.push_back(c);
  }
  auto g = p.greatest_of(lower);
  return g ? *g : -1;
}

int lub(const FinitePoset& p, int a, int b) {
  std::vector<int> upper;
  for (int c = 0; c < p.size(); ++c) {
    if (p.leq(a, c) && p.leq(b, c)) upper.push_back(c);
  }
  // Least of the upper bounds = greatest in the dual order.
  for (int c : upper) {
    bool least = true;
    for (int d : upper) {
      if (!p.leq(c, d)) {
        least = false;
        break;
      }
    }
    if (least) return c;
  }
  return -1;
}

}  // namespace

FiniteLattice FiniteLattice::validate(const FinitePoset& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("empty lattice");
  FiniteLattice l;
  l.poset_ = p;
  l.meet_.assign(n, std::vector<int>(n, -1));
  l.join_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int m = glb(p, a, b);
      if (m < 0) {
        throw NotALattice("no meet of " + p.id(a) + " and " + p.id(b), a, b,
                          true);
      }
      int j = lub(p, a, b);
      if (j < 0) {
        throw NotALattice("no join of " + p.id(a) + " and " + p.id(b), a, b,
                          false);
      }
      l.meet_[a][b] = l.meet_[b][a] = m;
      l.join_[a][b] = l.join_[b][a] = j;
    }
  }
  l.bottom_ = *p.minimum();
  l.top_ = *p.maximum();
  return l;
}

FiniteLattice FiniteLattice::from_covers(
    std::vector<std::string> ids,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  return validate(FinitePoset::from_covers(std::move(ids), covers));
}

FiniteLattice FiniteLattice::chain(int n) {
  return validate(FinitePoset::chain(n));
}

FiniteLattice FiniteLattice::boolean_lattice(int n) {
  std::vector<std::string> ids;
  std::vector<std::vector<char>> leq(1 << n, std::vector<char>(1 << n, 0));
  for (int s = 0; s < (1 << n); ++s) {
    std::string id = "{";
    for (int k = 0; k < n; ++k) {
      if (s & (1 << k)) {
        if (id.size() > 1) id += ",";
        id += std::to_string(k);
      }
    }
    ids.push_back(id + "}");
    for (int t = 0; t < (1 << n); ++t) leq[s][t] = ((s & t) == s) ? 1 : 0;
  }
  return validate(FinitePoset::from_leq(std::move(ids), std::move(leq)));
}

FiniteLattice FiniteLattice::m_n(int n) {
  std::vector<std::string> ids{"bot", "top"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) {
    std::string a = "x" + std::to_string(i);
    ids.push_back(a);
    covers.push_back({"bot", a});
    covers.push_back({a, "top"});
  }
  return from_covers(std::move(ids), covers);
}

int FiniteLattice::meet(const std::vector<int>& xs) const {
  int m = top_;
  for (int x : xs) m = meet_[m][x];
  return m;
}

int FiniteLattice::join(const std::vector<int>& xs) const {
  int j = bottom_;
  for (int x : xs) j = join_[j][x];
  return j;
}

JoinSemilattice0 JoinSemilattice0::validate(const FinitePoset& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("empty semilattice");
  JoinSemilattice0 s;
  s.poset_ = p;
  s.join_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int j = lub(p, a, b);
      if (j < 0) {
        throw std::invalid_argument("no join of " + p.id(a) + " and " +
                                    p.id(b));
      }
      s.join_[a][b] = s.join_[b][a] = j;
    }
  }
  auto z = p.minimum();
  if (!z) throw std::invalid_argument("no least element");
  s.zero_ = *z;
  return s;
}

JoinSemilattice0 JoinSemilattice0::of(const FiniteLattice& l) {
  return validate(l.poset());
}

LatticeHom::LatticeHom(FiniteLattice s, FiniteLattice t, std::vector<int> m)
    : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != source.size()) {
    throw std::invalid_argument("homomorphism table size mismatch");
  }
  for (int a = 0; a < source.size(); ++a) {
    for (int b = 0; b < source.size(); ++b) {
      if (map[source.meet(a, b)] != target.meet(map[a], map[b]) ||
          map[source.join(a, b)] != target.join(map[a], map[b])) {
        throw std::invalid_argument("map does not preserve operations");
      }
    }
  }
}

LatticeHom LatticeHom::identity(const FiniteLattice& l) {
  std::vector<int> m(l.size());
  std::iota(m.begin(), m.end(), 0);
  return LatticeHom(l, l, std::move(m));
}

bool LatticeHom::is_injective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == source.size();
}

bool LatticeHom::is_surjective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == target.size();
}

bool LatticeHom::preserves_bounds() const {
  return map[source.bottom()] == target.bottom() &&
         map[source.top()] == target.top();
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  if (!f.target.poset().same_order(g.source.poset())) {
    throw std::invalid_argument("composition type mismatch");
  }
  std::vector<int> m(f.source.size());
  for (int a = 0; a < f.source.size(); ++a) m[a] = g.map[f.map[a]];
  return LatticeHom(f.source, g.target, std::move(m));
}

Join0Hom::Join0Hom(JoinSemilattice0 s, JoinSemilattice0 t, std::vector<int> m)
    : source(std::move(s)), target(std::move(t)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != source.size()) {
    throw std::invalid_argument("homomorphism table size mismatch");
  }
  if (map[source.zero()] != target.zero()) {
    throw std::invalid_argument("map does not preserve zero");
  }
  for (int a = 0; a < source.size(); ++a) {
    for (int b = 0; b < source.size(); ++b) {
      if (map[source.join(a, b)] != target.join(map[a], map[b])) {
        throw std::invalid_argument("map does not preserve joins");
      }
    }
  }
}

Join0Hom Join0Hom::identity(const JoinSemilattice0& s) {
  std::vector<int> m(s.size());
  std::iota(m.begin(), m.end(), 0);
  return Join0Hom(s, s, std::move(m));
}

bool Join0Hom::is_injective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == source.size();
}

bool Join0Hom::is_surjective() const {
  std::set<int> img(map.begin(), map.end());
  return static_cast<int>(img.size()) == target.size();
}

bool Join0Hom::separates_zero() const {
  for (int a = 0; a < source.size(); ++a) {
    if (a != source.zero() && map[a] == target.zero()) return false;
  }
  return true;
}

Join0Hom compose(const Join0Hom& g, const Join0Hom& f) {
  if (!f.target.poset().same_order(g.source.poset())) {
    throw std::invalid_argument("composition type mismatch");
  }
  std::vector<int> m(f.source.size());
  for (int a = 0; a < f.source.size(); ++a) m[a] = g.map[f.map[a]];
  return Join0Hom(f.source, g.target, std::move(m));
}

int length(const FiniteLattice& l) { return l.poset().height(l.top()); }

int length(const JoinSemilattice0& s) {
  int h = 0;
  for (int e = 0; e < s.size(); ++e) h = std::max(h, s.poset().height(e));
  return h;
}

std::vector<int> atoms(const FiniteLattice& l) {
  return l.poset().upper_covers(l.bottom());
}

bool is_modular_serial(const FiniteLattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!l.leq(x, z)) continue;
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return false;
      }
    }
  }
  return true;
}

bool is_distributive_serial(const FiniteLattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_modular(const FiniteLattice& l) {
  const int n = l.size();
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (int x = 0; x < n; ++x) {
    bool local = true;
    for (int y = 0; y < n && local; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!l.leq(x, z)) continue;
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) {
          local = false;
          break;
        }
      }
    }
    ok = ok && local;
  }
  return ok;
}

bool is_distributive(const FiniteLattice& l) {
  const int n = l.size();
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (int x = 0; x < n; ++x) {
    bool local = true;
    for (int y = 0; y < n && local; ++y) {
      for (int z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          local = false;
          break;
        }
      }
    }
    ok = ok && local;
  }
  return ok;
}

std::vector<int> generated_subset(const FiniteLattice& l,
                                  const std::vector<int>& x) {
  if (x.empty()) throw std::invalid_argument("empty generating set");
  std::vector<char> in(l.size(), 0);
  for (int e : x) in[e] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < l.size(); ++a) {
      if (!in[a]) continue;
      for (int b = a; b < l.size(); ++b) {
        if (!in[b]) continue;
        if (!in[l.meet(a, b)]) in[l.meet(a, b)] = 1, changed = true;
        if (!in[l.join(a, b)]) in[l.join(a, b)] = 1, changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int e = 0; e < l.size(); ++e) {
    if (in[e]) out.push_back(e);
  }
  return out;
}

FiniteLattice sublattice_on(const FiniteLattice& l,
                            const std::vector<int>& subset) {
  const int m = static_cast<int>(subset.size());
  std::vector<std::string> ids;
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    ids.push_back(l.id(subset[i]));
    for (int j = 0; j < m; ++j) {
      leq[i][j] = l.leq(subset[i], subset[j]) ? 1 : 0;
    }
  }
  // The subset is meet/join closed, so the induced poset is a lattice whose
  // operations are the restrictions. Validate recomputes the same tables.
  auto sub = FiniteLattice::validate(
      FinitePoset::from_leq(std::move(ids), std::move(leq)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (subset[sub.meet(i, j)] != l.meet(subset[i], subset[j]) ||
          subset[sub.join(i, j)] != l.join(subset[i], subset[j])) {
        throw std::invalid_argument("subset is not closed under operations");
      }
    }
  }
  return sub;
}

FiniteLattice generated_sublattice(const FiniteLattice& l,
                                   const std::vector<int>& x) {
  return sublattice_on(l, generated_subset(l, x));
}

namespace {

bool is_closed(const FiniteLattice& l, const std::vector<char>& in) {
  for (int a = 0; a < l.size(); ++a) {
    if (!in[a]) continue;
    for (int b = a + 1; b < l.size(); ++b) {
      if (!in[b]) continue;
      if (!in[l.meet(a, b)] || !in[l.join(a, b)]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> all_sublattices(const FiniteLattice& l,
                                              int min_size, int max_size,
                                              long visited_cap) {
  const int n = l.size();
  std::vector<std::vector<int>> out;
  if (n <= 20) {
    if ((1L << n) > visited_cap) {
      throw ResourceExhausted("sublattice scan exceeds visited cap");
    }
    for (long mask = 1; mask < (1L << n); ++mask) {
      int sz = __builtin_popcountl(mask);
      if (sz < min_size || sz > max_size) continue;
      std::vector<char> in(n, 0);
      for (int e = 0; e < n; ++e) in[e] = (mask >> e) & 1;
      if (!is_closed(l, in)) continue;
      std::vector<int> s;
      for (int e = 0; e < n; ++e) {
        if (in[e]) s.push_back(e);
      }
      out.push_back(std::move(s));
    }
  } else {
    // Closure BFS from singleton seeds; grow each closed set one element
    // at a time, re-closing. Deduplicated via a visited set.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    long visited = 0;
    for (int e = 0; e < n; ++e) {
      auto c = generated_subset(l, {e});
      if (seen.insert(c).second) frontier.push_back(c);
    }
    while (!frontier.empty()) {
      auto cur = frontier.back();
      frontier.pop_back();
      if (++visited > visited_cap) {
        throw ResourceExhausted("sublattice enumeration exceeded visited cap");
      }
      if (static_cast<int>(cur.size()) <= max_size) {
        for (int e = 0; e < n; ++e) {
          if (std::binary_search(cur.begin(), cur.end(), e)) continue;
          auto g = cur;
          g.push_back(e);
          auto c = generated_subset(l, g);
          if (static_cast<int>(c.size()) <= max_size &&
              seen.insert(c).second) {
            frontier.push_back(c);
          }
        }
      }
    }
    for (const auto& s : seen) {
      if (static_cast<int>(s.size()) >= min_size &&
          static_cast<int>(s.size()) <= max_size) {
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> maximal_sublattices(const FiniteLattice& l,
                                                  long visited_cap) {
  auto all = all_sublattices(l, 1, l.size() - 1, visited_cap);
  std::vector<std::vector<int>> out;
  for (const auto& s : all) {
    bool maximal = true;
    for (const auto& t : all) {
      if (t.size() <= s.size() || &t == &s) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::vector<int> join_irreducible(const FiniteLattice& l) {
  std::vector<int> out;
  for (int e = 0; e < l.size(); ++e) {
    if (e != l.bottom() && l.poset().lower_covers(e).size() == 1) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<int> meet_irreducible_elements(const FiniteLattice& l) {
  std::vector<int> out;
  for (int e = 0; e < l.size(); ++e) {
    if (e != l.top() && l.poset().upper_covers(e).size() == 1) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<int> doubly_irreducible(const FiniteLattice& l) {
  auto ji = join_irreducible(l);
  auto mi = meet_irreducible_elements(l);
  std::vector<int> out;
  std::set_intersection(ji.begin(), ji.end(), mi.begin(), mi.end(),
                        std::back_inserter(out));
  return out;
}

namespace {

// Invariant vector used to prune isomorphism search.
std::vector<long> element_signature(const FiniteLattice& l, int e) {
  const auto& p = l.poset();
  return {p.height(e), p.depth(e),
          static_cast<long>(p.upper_covers(e).size()),
          static_cast<long>(p.lower_covers(e).size()),
          static_cast<long>(p.down_set(e).size()),
          static_cast<long>(p.up_set(e).size())};
}

// Backtracking over injective operation-preserving maps l1 -> l2.
// If bijective is set, only bijections are produced.
template <typename Sink>
void search_maps(const FiniteLattice& l1, const FiniteLattice& l2,
                 bool bijective, Sink&& sink) {
  const int n1 = l1.size(), n2 = l2.size();
  if (bijective && n1 != n2) return;

  std::vector<std::vector<long>> sig2(n2);
  for (int b = 0; b < n2; ++b) sig2[b] = element_signature(l2, b);

  std::vector<std::vector<int>> candidates(n1);
  for (int a = 0; a < n1; ++a) {
    auto sa = element_signature(l1, a);
    for (int b = 0; b < n2; ++b) {
      if (bijective ? sig2[b] == sa
                    : (sig2[b][0] >= sa[0] && sig2[b][1] >= sa[1])) {
        candidates[a].push_back(b);
      }
    }
    if (candidates[a].empty()) return;
  }

  // Assign in order of fewest candidates first.
  std::vector<int> order(n1);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::vector<int> map(n1, -1);
  std::vector<char> used(n2, 0);
  bool stop = false;

  auto consistent = [&](int a) {
    for (int x = 0; x < n1; ++x) {
      if (map[x] < 0) continue;
      int m1 = l1.meet(a, x), j1 = l1.join(a, x);
      int m2 = l2.meet(map[a], map[x]), j2 = l2.join(map[a], map[x]);
      if (map[m1] >= 0 && map[m1] != m2) return false;
      if (map[j1] >= 0 && map[j1] != j2) return false;
      if (l1.leq(a, x) != l2.leq(map[a], map[x]) ||
          l1.leq(x, a) != l2.leq(map[x], map[a])) {
        return false;
      }
    }
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t k) {
    if (stop) return;
    if (k == order.size()) {
      stop = !sink(map);
      return;
    }
    int a = order[k];
    for (int b : candidates[a]) {
      if (used[b]) continue;
      map[a] = b;
      used[b] = 1;
      if (consistent(a)) rec(k + 1);
      used[b] = 0;
      map[a] = -1;
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& l1,
                                                 const FiniteLattice& l2) {
  std::optional<std::vector<int>> found;
  search_maps(l1, l2, true, [&](const std::vector<int>& m) {
    found = m;
    return false;  // stop at first
  });
  return found;
}

std::vector<LatticeHom> find_embeddings(const FiniteLattice& l1,
                                        const FiniteLattice& l2,
                                        size_t max_count) {
  std::vector<LatticeHom> out;
  search_maps(l1, l2, false, [&](const std::vector<int>& m) {
    out.push_back(LatticeHom(l1, l2, m));
    return out.size() < max_count;
  });
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const JoinSemilattice0& s1,
                                                 const JoinSemilattice0& s2) {
  // A bijection preserving both orders preserves joins; reuse the lattice
  // search when both posets happen to be lattices, else a direct search.
  if (s1.size() != s2.size()) return std::nullopt;
  try {
    auto l1 = FiniteLattice::validate(s1.poset());
    auto l2 = FiniteLattice::validate(s2.poset());
    return find_isomorphism(l1, l2);
  } catch (const NotALattice&) {
  }
  const int n = s1.size();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::optional<std::vector<int>> found;
  std::function<void(int)> rec = [&](int a) {
    if (found) return;
    if (a == n) {
      found = map;
      return;
    }
    for (int b = 0; b < n && !found; ++b) {
      if (used[b]) continue;
      bool ok = true;
      for (int x = 0; x <= a && ok; ++x) {
        if (map[x] < 0) continue;
        if (s1.leq(a, x) != s2.leq(b, map[x]) ||
            s1.leq(x, a) != s2.leq(map[x], b)) {
          ok = false;
        }
      }
      if (!ok) continue;
      map[a] = b;
      used[b] = 1;
      rec(a + 1);
      used[b] = 0;
      map[a] = -1;
    }
  };
  rec(0);
  return found;
}

FiniteLattice direct_product(const std::vector<FiniteLattice>& factors) {
  if (factors.empty()) return FiniteLattice::chain(1);
  long n = 1;
  for (const auto& f : factors) n *= f.size();
  if (n > 200000) throw ResourceExhausted("product lattice too large");

  auto unrank = [&](long r) {
    std::vector<int> t(factors.size());
    for (size_t k = factors.size(); k-- > 0;) {
      t[k] = static_cast<int>(r % factors[k].size());
      r /= factors[k].size();
    }
    return t;
  };

  std::vector<std::string> ids;
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (long r = 0; r < n; ++r) {
    auto t = unrank(r);
    std::string id = "(";
    for (size_t k = 0; k < t.size(); ++k) {
      if (k) id += ",";
      id += factors[k].id(t[k]);
    }
    ids.push_back(id + ")");
    for (long s = 0; s < n; ++s) {
      auto u = unrank(s);
      bool le = true;
      for (size_t k = 0; k < t.size() && le; ++k) {
        le = factors[k].leq(t[k], u[k]);
      }
      leq[r][s] = le ? 1 : 0;
    }
  }
  return FiniteLattice::validate(
      FinitePoset::from_leq(std::move(ids), std::move(leq)));
}

std::string canonical_form(const FiniteLattice& l) {
  const int n = l.size();

  // Iterated refinement: start from structural signatures, refine by
  // multisets of neighbor colors until stable.
  std::vector<int> color(n);
  {
    std::map<std::vector<long>, std::vector<int>> groups;
    for (int e = 0; e < n; ++e) groups[element_signature(l, e)].push_back(e);
    int c = 0;
    for (auto& [sig, members] : groups) {
      for (int e : members) color[e] = c;
      ++c;
    }
  }
  while (true) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>,
             std::vector<int>>
        groups;
    for (int e = 0; e < n; ++e) {
      std::vector<std::pair<int, int>> nb;
      for (int u : l.poset().upper_covers(e)) nb.push_back({0, color[u]});
      for (int d : l.poset().lower_covers(e)) nb.push_back({1, color[d]});
      std::sort(nb.begin(), nb.end());
      groups[{color[e], std::move(nb)}].push_back(e);
    }
    if (static_cast<int>(groups.size()) ==
        *std::max_element(color.begin(), color.end()) + 1) {
      break;
    }
    int c = 0;
    for (auto& [key, members] : groups) {
      for (int e : members) color[e] = c;
      ++c;
    }
  }

  // Backtracking over color-respecting orderings; keep the lexicographically
  // least (meet table, join table) encoding.
  std::vector<int> order(n, -1);   // position -> element
  std::vector<int> pos(n, -1);     // element -> position
  std::string best;

  auto encode = [&]() {
    std::string s;
    s.reserve(2 * n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        s += static_cast<char>('a' + pos[l.meet(order[i], order[j])]);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        s += static_cast<char>('a' + pos[l.join(order[i], order[j])]);
      }
    }
    return s;
  };

  if (n > 26) {
    // Fall back to a coarser key for big lattices; canonical_form is only
    // used for deduping small members.
    std::vector<int> cs(color);
    std::sort(cs.begin(), cs.end());
    std::string s = "big:" + std::to_string(n) + ":";
    for (int c : cs) s += std::to_string(c) + ",";
    return s;
  }

  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      auto s = encode();
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    // Among unplaced elements, only those of the minimal remaining color.
    int cmin = -1;
    for (int e = 0; e < n; ++e) {
      if (pos[e] < 0 && (cmin < 0 || color[e] < cmin)) cmin = color[e];
    }
    for (int e = 0; e < n; ++e) {
      if (pos[e] >= 0 || color[e] != cmin) continue;
      order[k] = e;
      pos[e] = k;
      rec(k + 1);
      pos[e] = -1;
      order[k] = -1;
    }
  };
  rec(0);
  return best;
}

namespace {

// Backtracking over all operation-preserving maps (not necessarily
// injective), pruned by partial consistency.
template <typename L, typename Consistent, typename Sink>
void search_all_maps(const L& l1, const L& l2, Consistent&& consistent,
                     Sink&& sink) {
  const int n1 = l1.size(), n2 = l2.size();
  std::vector<int> map(n1, -1);
  bool stop = false;
  std::function<void(int)> rec = [&](int a) {
    if (stop) return;
    if (a == n1) {
      stop = !sink(map);
      return;
    }
    for (int b = 0; b < n2; ++b) {
      map[a] = b;
      if (consistent(map, a)) rec(a + 1);
      map[a] = -1;
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

std::vector<LatticeHom> all_lattice_homs(const FiniteLattice& l1,
                                         const FiniteLattice& l2,
                                         size_t max_count) {
  std::vector<LatticeHom> out;
  auto consistent = [&](const std::vector<int>& map, int a) {
    for (int x = 0; x <= a; ++x) {
      if (map[x] < 0) continue;
      int m1 = l1.meet(a, x), j1 = l1.join(a, x);
      if (map[m1] >= 0 && map[m1] != l2.meet(map[a], map[x])) return false;
      if (map[j1] >= 0 && map[j1] != l2.join(map[a], map[x])) return false;
      if (l1.leq(x, a) && !l2.leq(map[x], map[a])) return false;
      if (l1.leq(a, x) && !l2.leq(map[a], map[x])) return false;
      // pairs below a whose meet or join is a itself
      for (int y = 0; y < x; ++y) {
        if (map[y] < 0) continue;
        if (l1.meet(x, y) == a && map[a] != l2.meet(map[x], map[y])) {
          return false;
        }
        if (l1.join(x, y) == a && map[a] != l2.join(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  };
  search_all_maps(l1, l2, consistent, [&](const std::vector<int>& m) {
    out.push_back(LatticeHom(l1, l2, m));
    return out.size() < max_count;
  });
  return out;
}

std::vector<Join0Hom> all_join0_homs(const JoinSemilattice0& s1,
                                     const JoinSemilattice0& s2,
                                     size_t max_count) {
  std::vector<Join0Hom> out;
  auto consistent = [&](const std::vector<int>& map, int a) {
    if (a == s1.zero() && map[a] != s2.zero()) return false;
    for (int x = 0; x <= a; ++x) {
      if (map[x] < 0) continue;
      int j1 = s1.join(a, x);
      if (map[j1] >= 0 && map[j1] != s2.join(map[a], map[x])) return false;
      if (s1.leq(x, a) && !s2.leq(map[x], map[a])) return false;
      if (s1.leq(a, x) && !s2.leq(map[a], map[x])) return false;
      for (int y = 0; y < x; ++y) {
        if (map[y] < 0) continue;
        if (s1.join(x, y) == a && map[a] != s2.join(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  };
  search_all_maps(s1, s2, consistent, [&](const std::vector<int>& m) {
    out.push_back(Join0Hom(s1, s2, m));
    return out.size() < max_count;
  });
  return out;
}

}  // namespace latvar
