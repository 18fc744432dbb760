#include "latvar/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latvar {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// One-step links of the congruence generated by the given pairs: the pairs
// themselves plus all their images under the translations x -> x op t,
// iterated to a fixpoint. The congruence is the transitive closure.
struct Link {
  int u, v;
  int generator;  // index into pairs for seed links, else -1
  int parent;     // link this one was derived from, else -1
  char op;        // 'm' or 'j' when derived
  int param;
};

std::vector<Link> link_closure(const FiniteLattice& l,
                               const std::vector<std::pair<int, int>>& pairs) {
  const int n = l.size();
  std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
  std::vector<Link> links;
  auto add = [&](int u, int v, int gen, int parent, char op, int param) {
    if (u == v) return;
    int a = std::min(u, v), b = std::max(u, v);
    if (seen[a][b]) return;
    seen[a][b] = 1;
    links.push_back(Link{u, v, gen, parent, op, param});
  };
  for (size_t i = 0; i < pairs.size(); ++i) {
    add(pairs[i].first, pairs[i].second, static_cast<int>(i), -1, 0, 0);
  }
  for (size_t k = 0; k < links.size(); ++k) {
    Link cur = links[k];
    for (int t = 0; t < n; ++t) {
      add(l.meet(cur.u, t), l.meet(cur.v, t), -1, static_cast<int>(k), 'm', t);
      add(l.join(cur.u, t), l.join(cur.v, t), -1, static_cast<int>(k), 'j', t);
    }
  }
  return links;
}

}  // namespace

Congruence normalize_partition(std::vector<int> block) {
  std::map<int, int> relabel;
  Congruence c;
  c.block.resize(block.size());
  for (size_t e = 0; e < block.size(); ++e) {
    auto it = relabel.find(block[e]);
    if (it == relabel.end()) {
      it = relabel.emplace(block[e], c.num_blocks++).first;
    }
    c.block[e] = it->second;
  }
  return c;
}

Congruence congruence_identity(const FiniteLattice& l) {
  std::vector<int> b(l.size());
  std::iota(b.begin(), b.end(), 0);
  return normalize_partition(std::move(b));
}

Congruence congruence_full(const FiniteLattice& l) {
  return normalize_partition(std::vector<int>(l.size(), 0));
}

bool is_congruence(const FiniteLattice& l, const Congruence& c) {
  if (static_cast<int>(c.block.size()) != l.size()) return false;
  for (int x = 0; x < l.size(); ++x) {
    for (int y = x + 1; y < l.size(); ++y) {
      if (!c.same(x, y)) continue;
      for (int t = 0; t < l.size(); ++t) {
        if (!c.same(l.meet(x, t), l.meet(y, t))) return false;
        if (!c.same(l.join(x, t), l.join(y, t))) return false;
      }
    }
  }
  return true;
}

bool con_leq(const Congruence& fine, const Congruence& coarse) {
  for (size_t x = 0; x < fine.block.size(); ++x) {
    for (size_t y = x + 1; y < fine.block.size(); ++y) {
      if (fine.block[x] == fine.block[y] &&
          coarse.block[x] != coarse.block[y]) {
        return false;
      }
    }
  }
  return true;
}

Congruence con_meet(const Congruence& a, const Congruence& b) {
  std::vector<int> block(a.block.size());
  for (size_t e = 0; e < block.size(); ++e) {
    block[e] = a.block[e] * static_cast<int>(b.block.size()) + b.block[e];
  }
  return normalize_partition(std::move(block));
}

Congruence congruence_generated(
    const FiniteLattice& l, const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(l.size());
  for (const auto& link : link_closure(l, pairs)) uf.unite(link.u, link.v);
  std::vector<int> block(l.size());
  for (int e = 0; e < l.size(); ++e) block[e] = uf.find(e);
  return normalize_partition(std::move(block));
}

Congruence principal_congruence(const FiniteLattice& l, int a, int b) {
  return congruence_generated(l, {{a, b}});
}

Congruence con_join(const FiniteLattice& l, const Congruence& a,
                    const Congruence& b) {
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < l.size(); ++e) {
    for (int f = e + 1; f < l.size(); ++f) {
      if (a.same(e, f) || b.same(e, f)) pairs.push_back({e, f});
    }
  }
  return congruence_generated(l, pairs);
}

std::vector<Congruence> principal_table_serial(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<Congruence> table(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a * n + b] = principal_congruence(l, a, b);
    }
  }
  return table;
}

std::vector<Congruence> principal_table(const FiniteLattice& l) {
  const int n = l.size();
  std::vector<Congruence> table(n * n);
#pragma omp parallel for schedule(dynamic)
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a * n + b] = principal_congruence(l, a, b);
    }
  }
  return table;
}

int ConLattice::index_of(const Congruence& c) const {
  auto it = std::lower_bound(congruences.begin(), congruences.end(), c);
  if (it == congruences.end() || !(*it == c)) {
    throw std::invalid_argument("not a congruence of this lattice");
  }
  return static_cast<int>(it - congruences.begin());
}

ConLattice con_lattice(const FiniteLattice& l, long cap) {
  std::set<Congruence> all;
  all.insert(congruence_identity(l));

  std::vector<Congruence> principals;
  for (const auto& c : principal_table(l)) principals.push_back(c);
  std::sort(principals.begin(), principals.end());
  principals.erase(std::unique(principals.begin(), principals.end()),
                   principals.end());

  std::deque<Congruence> work(principals.begin(), principals.end());
  for (const auto& c : principals) all.insert(c);
  while (!work.empty()) {
    Congruence cur = work.front();
    work.pop_front();
    for (const auto& p : principals) {
      Congruence j = con_join(l, cur, p);
      if (all.insert(j).second) {
        if (static_cast<long>(all.size()) > cap) {
          throw ResourceExhausted("congruence count exceeded cap");
        }
        work.push_back(j);
      }
    }
  }

  ConLattice con;
  con.carrier = l;
  con.congruences.assign(all.begin(), all.end());

  const int m = con.size();
  std::vector<std::string> ids;
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    ids.push_back("c" + std::to_string(i));
    for (int j = 0; j < m; ++j) {
      leq[i][j] = con_leq(con.congruences[i], con.congruences[j]) ? 1 : 0;
    }
  }
  con.lattice =
      FiniteLattice::validate(FinitePoset::from_leq(std::move(ids), std::move(leq)));
  return con;
}

bool is_simple(const FiniteLattice& l) {
  if (l.size() < 2) return false;
  for (int a = 0; a < l.size(); ++a) {
    for (int b = a + 1; b < l.size(); ++b) {
      if (principal_congruence(l, a, b).num_blocks != 1) return false;
    }
  }
  return true;
}

QuotientLattice quotient(const FiniteLattice& l, const Congruence& theta) {
  if (!is_congruence(l, theta)) {
    throw std::invalid_argument("partition is not a congruence");
  }
  const int m = theta.num_blocks;
  // Representative = least element index in each block.
  std::vector<int> rep(m, -1);
  for (int e = 0; e < l.size(); ++e) {
    if (rep[theta.block[e]] < 0) rep[theta.block[e]] = e;
  }
  std::vector<std::string> ids(m);
  for (int b = 0; b < m; ++b) ids[b] = "[" + l.id(rep[b]) + "]";
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (int b1 = 0; b1 < m; ++b1) {
    for (int b2 = 0; b2 < m; ++b2) {
      // x/θ ≤ y/θ iff x ∨ y θ y
      leq[b1][b2] =
          theta.same(l.join(rep[b1], rep[b2]), rep[b2]) ? 1 : 0;
    }
  }
  QuotientLattice q;
  q.lattice =
      FiniteLattice::validate(FinitePoset::from_leq(std::move(ids), std::move(leq)));
  q.projection.resize(l.size());
  for (int e = 0; e < l.size(); ++e) q.projection[e] = theta.block[e];
  return q;
}

Join0Hom con_of_hom(const LatticeHom& f, const ConLattice& con_a,
                    const ConLattice& con_b) {
  std::vector<int> map(con_a.size());
  for (int i = 0; i < con_a.size(); ++i) {
    const Congruence& alpha = con_a.congruences[i];
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> rep(alpha.num_blocks, -1);
    for (int e = 0; e < f.source.size(); ++e) {
      int b = alpha.block[e];
      if (rep[b] < 0) {
        rep[b] = e;
      } else {
        pairs.push_back({f.map[rep[b]], f.map[e]});
      }
    }
    map[i] = con_b.index_of(congruence_generated(f.target, pairs));
  }
  return Join0Hom(con_a.semilattice(), con_b.semilattice(), std::move(map));
}

std::optional<MalcevWitness> malcev_entailment(
    const FiniteLattice& l, std::pair<int, int> xy,
    const std::vector<std::pair<int, int>>& pairs) {
  auto [x, y] = xy;
  if (x == y) {
    MalcevWitness w;
    w.chain = {x};
    return w;
  }
  auto links = link_closure(l, pairs);
  UnionFind uf(l.size());
  for (const auto& link : links) uf.unite(link.u, link.v);
  if (uf.find(x) != uf.find(y)) return std::nullopt;

  // Shortest link path from x to y.
  std::vector<std::vector<std::pair<int, int>>> adj(l.size());  // (next, link)
  for (size_t k = 0; k < links.size(); ++k) {
    adj[links[k].u].push_back({links[k].v, static_cast<int>(k)});
    adj[links[k].v].push_back({links[k].u, static_cast<int>(k)});
  }
  std::vector<int> prev(l.size(), -1), via(l.size(), -1);
  std::deque<int> bfs{x};
  prev[x] = x;
  while (!bfs.empty()) {
    int cur = bfs.front();
    bfs.pop_front();
    if (cur == y) break;
    for (auto [nxt, k] : adj[cur]) {
      if (prev[nxt] < 0) {
        prev[nxt] = cur;
        via[nxt] = k;
        bfs.push_back(nxt);
      }
    }
  }

  MalcevWitness w;
  std::vector<int> path{y};
  std::vector<int> used_links;
  for (int cur = y; cur != x; cur = prev[cur]) {
    used_links.push_back(via[cur]);
    path.push_back(prev[cur]);
  }
  std::reverse(path.begin(), path.end());
  std::reverse(used_links.begin(), used_links.end());
  w.chain = path;
  for (size_t s = 0; s < used_links.size(); ++s) {
    MalcevStep step;
    step.from = path[s];
    step.to = path[s + 1];
    // Unwind the derivation to the seed pair; ops outermost last.
    int k = used_links[s];
    while (links[k].parent >= 0) {
      step.ops.push_back({links[k].op, links[k].param});
      k = links[k].parent;
    }
    std::reverse(step.ops.begin(), step.ops.end());
    step.generator = pairs[links[k].generator];
    w.steps.push_back(std::move(step));
  }
  return w;
}

std::vector<int> meet_irreducible(const ConLattice& con) {
  std::vector<int> out;
  int top = con.lattice.top();
  for (int i = 0; i < con.size(); ++i) {
    if (i != top && con.lattice.poset().upper_covers(i).size() == 1) {
      out.push_back(i);
    }
  }
  return out;
}

BooleanDecomposition boolean_decomposition(const FiniteLattice& l,
                                           const Congruence& alpha) {
  BooleanDecomposition r;
  auto con = con_lattice(l);
  int ai = con.index_of(alpha);
  for (int t : meet_irreducible(con)) {
    if (!con.lattice.leq(ai, t)) r.q.push_back(t);
  }

  r.hypothesis_ok = true;
  std::vector<ConLattice> factor_cons;
  std::vector<LatticeHom> projections;
  {
    auto qa = quotient(l, alpha);
    projections.push_back(LatticeHom(l, qa.lattice, qa.projection));
    factor_cons.push_back(con_lattice(qa.lattice));
  }
  for (int t : r.q) {
    auto qt = quotient(l, con.congruences[t]);
    if (!is_simple(qt.lattice)) {
      r.hypothesis_ok = false;
      r.failed_theta = t;
      return r;
    }
    projections.push_back(LatticeHom(l, qt.lattice, qt.projection));
    factor_cons.push_back(con_lattice(qt.lattice));
  }

  long product_size = 1;
  std::vector<Join0Hom> conf;
  for (size_t k = 0; k < projections.size(); ++k) {
    conf.push_back(con_of_hom(projections[k], con, factor_cons[k]));
    product_size *= factor_cons[k].size();
  }
  std::set<std::vector<int>> images;
  for (int i = 0; i < con.size(); ++i) {
    std::vector<int> tuple;
    for (const auto& h : conf) tuple.push_back(h.map[i]);
    images.insert(tuple);
    r.map.push_back(std::move(tuple));
  }
  r.is_isomorphism = static_cast<long>(images.size()) == con.size() &&
                     product_size == con.size();
  return r;
}

std::string congruence_to_string(const FiniteLattice& l, const Congruence& c) {
  std::vector<std::vector<std::string>> blocks(c.num_blocks);
  for (int e = 0; e < l.size(); ++e) blocks[c.block[e]].push_back(l.id(e));
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  std::string s = "{";
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (k) s += ",";
    s += "{";
    for (size_t j = 0; j < blocks[k].size(); ++j) {
      if (j) s += ",";
      s += blocks[k][j];
    }
    s += "}";
  }
  return s + "}";
}

}  // namespace latvar
