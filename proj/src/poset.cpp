#include "latvar/poset.hpp"

#include <algorithm>
#include <set>

namespace latvar {

void FinitePoset::finish_construction() {
  const int n = size();
  index_.clear();
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw std::invalid_argument("duplicate element id: " + ids_[i]);
    }
  }
  // Order axioms.
  for (int a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw std::invalid_argument("order not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) {
        throw std::invalid_argument("order not antisymmetric: " + ids_[a] +
                                    " ~ " + ids_[b]);
      }
      if (leq_[a][b]) {
        for (int c = 0; c < n; ++c) {
          if (leq_[b][c] && !leq_[a][c]) {
            throw std::invalid_argument("order not transitive");
          }
        }
      }
    }
  }
  cover_.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c) {
        if (lt(a, c) && lt(c, b)) direct = false;
      }
      cover_[a][b] = direct ? 1 : 0;
    }
  }
}

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> ids,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(ids.size());
  std::map<std::string, int> idx;
  for (int i = 0; i < n; ++i) {
    if (!idx.emplace(ids[i], i).second) {
      throw std::invalid_argument("duplicate element id: " + ids[i]);
    }
  }
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) leq[i][i] = 1;
  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo);
    auto b = idx.find(hi);
    if (a == idx.end() || b == idx.end()) {
      throw std::invalid_argument("cover references unknown id");
    }
    leq[a->second][b->second] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!leq[a][k]) continue;
      for (int b = 0; b < n; ++b) {
        if (leq[k][b]) leq[a][b] = 1;
      }
    }
  }
  FinitePoset p;
  p.ids_ = std::move(ids);
  p.leq_ = std::move(leq);
  p.finish_construction();
  return p;
}

FinitePoset FinitePoset::from_leq(std::vector<std::string> ids,
                                  std::vector<std::vector<char>> leq) {
  FinitePoset p;
  p.ids_ = std::move(ids);
  p.leq_ = std::move(leq);
  if (p.leq_.size() != p.ids_.size()) {
    throw std::invalid_argument("relation matrix size mismatch");
  }
  for (const auto& row : p.leq_) {
    if (row.size() != p.ids_.size()) {
      throw std::invalid_argument("relation matrix size mismatch");
    }
  }
  p.finish_construction();
  return p;
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.push_back({ids[i], ids[i + 1]});
  return from_covers(std::move(ids), covers);
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return from_covers(std::move(ids), {});
}

int FinitePoset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown element id: " + id);
  }
  return it->second;
}

bool FinitePoset::has_id(const std::string& id) const {
  return index_.count(id) > 0;
}

std::vector<int> FinitePoset::upper_covers(int e) const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b) {
    if (cover_[e][b]) out.push_back(b);
  }
  return out;
}

std::vector<int> FinitePoset::lower_covers(int e) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (cover_[a][e]) out.push_back(a);
  }
  return out;
}

std::vector<int> FinitePoset::down_set(int e) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (leq(a, e)) out.push_back(a);
  }
  return out;
}

std::vector<int> FinitePoset::up_set(int e) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (leq(e, a)) out.push_back(a);
  }
  return out;
}

std::vector<int> FinitePoset::down_set(const std::vector<int>& xs) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    for (int x : xs) {
      if (leq(a, x)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::vector<int> FinitePoset::up_set(const std::vector<int>& xs) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    for (int x : xs) {
      if (leq(x, a)) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (lower_covers(a).empty()) out.push_back(a);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (upper_covers(a).empty()) out.push_back(a);
  }
  return out;
}

std::optional<int> FinitePoset::minimum() const {
  for (int a = 0; a < size(); ++a) {
    bool below_all = true;
    for (int b = 0; b < size() && below_all; ++b) below_all = leq(a, b);
    if (below_all) return a;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::maximum() const {
  for (int a = 0; a < size(); ++a) {
    bool above_all = true;
    for (int b = 0; b < size() && above_all; ++b) above_all = leq(b, a);
    if (above_all) return a;
  }
  return std::nullopt;
}

std::optional<int> FinitePoset::greatest_of(
    const std::vector<int>& subset) const {
  for (int a : subset) {
    bool top = true;
    for (int b : subset) {
      if (!leq(b, a)) {
        top = false;
        break;
      }
    }
    if (top) return a;
  }
  return std::nullopt;
}

int FinitePoset::height(int e) const {
  int h = 0;
  for (int a : lower_covers(e)) h = std::max(h, height(a) + 1);
  return h;
}

int FinitePoset::depth(int e) const {
  int d = 0;
  for (int a : upper_covers(e)) d = std::max(d, depth(a) + 1);
  return d;
}

bool FinitePoset::is_tree() const {
  if (!minimum().has_value()) return false;
  for (int e = 0; e < size(); ++e) {
    auto below = down_set(e);
    for (int a : below) {
      for (int b : below) {
        if (!leq(a, b) && !leq(b, a)) return false;
      }
    }
  }
  return true;
}

std::vector<int> FinitePoset::linear_extension() const {
  std::vector<int> out;
  std::vector<char> used(size(), 0);
  while (static_cast<int>(out.size()) < size()) {
    int best = -1;
    for (int a = 0; a < size(); ++a) {
      if (used[a]) continue;
      bool minimal = true;
      for (int b = 0; b < size(); ++b) {
        if (!used[b] && lt(b, a)) {
          minimal = false;
          break;
        }
      }
      if (minimal && (best == -1 || ids_[a] < ids_[best])) best = a;
    }
    used[best] = 1;
    out.push_back(best);
  }
  return out;
}

bool FinitePoset::same_order(const FinitePoset& other) const {
  return leq_ == other.leq_;
}

bool is_kernel(const FinitePoset& u, const std::vector<int>& members) {
  for (int e : members) {
    if (e < 0 || e >= u.size()) {
      throw std::invalid_argument("kernel member out of range");
    }
  }
  for (int e = 0; e < u.size(); ++e) {
    std::vector<int> meet;
    for (int v : members) {
      if (u.leq(v, e)) meet.push_back(v);
    }
    if (meet.empty() || !u.greatest_of(meet).has_value()) return false;
  }
  return true;
}

Kernel make_kernel(const FinitePoset& u, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_kernel(u, members)) {
    throw std::invalid_argument("subset is not a kernel");
  }
  return Kernel{std::move(members)};
}

int kernel_project(const FinitePoset& u, const Kernel& v, int e) {
  std::vector<int> meet;
  for (int m : v.members) {
    if (u.leq(m, e)) meet.push_back(m);
  }
  auto g = u.greatest_of(meet);
  if (!g.has_value()) throw std::invalid_argument("not a kernel");
  return *g;
}

Kernel kernel_intersection(const FinitePoset& u, const Kernel& v,
                           const Kernel& w) {
  std::vector<int> out;
  std::set_intersection(v.members.begin(), v.members.end(), w.members.begin(),
                        w.members.end(), std::back_inserter(out));
  return make_kernel(u, std::move(out));
}

NormCovering::NormCovering(FinitePoset u, FinitePoset i, std::vector<int> norm)
    : u_(std::move(u)), i_(std::move(i)), norm_(std::move(norm)) {
  if (static_cast<int>(norm_.size()) != u_.size()) {
    throw std::invalid_argument("norm size mismatch");
  }
  for (int n : norm_) {
    if (n < 0 || n >= i_.size()) {
      throw std::invalid_argument("norm value out of range");
    }
  }
  for (int a = 0; a < u_.size(); ++a) {
    for (int b = 0; b < u_.size(); ++b) {
      if (u_.leq(a, b) && !i_.leq(norm_[a], norm_[b])) {
        throw std::invalid_argument("norm is not order-preserving");
      }
    }
  }
}

std::vector<SharpIdeal> sharp_ideals(const NormCovering& nc) {
  std::vector<SharpIdeal> out;
  for (int e = 0; e < nc.U().size(); ++e) out.push_back(SharpIdeal{e});
  return out;
}

bool is_extreme(const NormCovering& nc, int generator) {
  for (int v = 0; v < nc.U().size(); ++v) {
    if (nc.U().lt(generator, v) && nc.norm(v) == nc.norm(generator)) {
      return false;
    }
  }
  return true;
}

std::vector<SharpIdeal> extreme_ideals(const NormCovering& nc) {
  std::vector<SharpIdeal> out;
  for (int e = 0; e < nc.U().size(); ++e) {
    if (is_extreme(nc, e)) out.push_back(SharpIdeal{e});
  }
  return out;
}

bool is_tight(const NormCovering& nc) {
  std::vector<int> extremes;
  for (auto si : extreme_ideals(nc)) extremes.push_back(si.generator);
  for (int u : extremes) {
    // Extreme ideals below ↓u.
    std::vector<int> below;
    for (int v : extremes) {
      if (nc.U().leq(v, u)) below.push_back(v);
    }
    std::vector<int> target;
    for (int i = 0; i < nc.I().size(); ++i) {
      if (nc.I().leq(i, nc.norm(u))) target.push_back(i);
    }
    if (below.size() != target.size()) return false;
    // Injective onto the down-set, preserving and reflecting order.
    std::set<int> image;
    for (int v : below) image.insert(nc.norm(v));
    if (image != std::set<int>(target.begin(), target.end())) return false;
    for (int a : below) {
      for (int b : below) {
        if (nc.U().leq(a, b) != nc.I().leq(nc.norm(a), nc.norm(b))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

std::string func_id(const FinitePoset& tree,
                    const std::vector<std::pair<int, int>>& f) {
  if (f.empty()) return "{}";
  std::string s = "{";
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) s += ",";
    s += tree.id(f[k].first) + "=" + std::to_string(f[k].second);
  }
  return s + "}";
}

}  // namespace

int TreeCovering::element_for(
    const std::vector<std::pair<int, int>>& f) const {
  auto g = f;
  std::sort(g.begin(), g.end());
  for (int e = 0; e < static_cast<int>(func.size()); ++e) {
    if (func[e] == g) return e;
  }
  throw std::invalid_argument("no such covering element");
}

TreeCovering build_tree_covering(const FinitePoset& tree,
                                 const std::function<int(int)>& capacity) {
  if (!tree.is_tree()) throw std::invalid_argument("poset is not a tree");
  const int root = *tree.minimum();

  std::vector<int> cap(tree.size(), 0);
  for (int t = 0; t < tree.size(); ++t) {
    if (t == root) continue;
    cap[t] = capacity(t);
    if (cap[t] < 1) throw std::invalid_argument("capacity must be positive");
  }

  // Chains of T⁻ are exactly subsets of some φ(t) = ↓t − {root}.
  std::set<std::vector<int>> chains;
  chains.insert(std::vector<int>{});
  for (int t = 0; t < tree.size(); ++t) {
    if (t == root) continue;
    std::vector<int> phi;
    for (int s : tree.down_set(t)) {
      if (s != root) phi.push_back(s);
    }
    std::sort(phi.begin(), phi.end());
    const int m = static_cast<int>(phi.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> c;
      for (int k = 0; k < m; ++k) {
        if (mask & (1 << k)) c.push_back(phi[k]);
      }
      chains.insert(c);
    }
  }

  TreeCovering tc;
  tc.tree = tree;
  tc.capacity = cap;
  for (const auto& c : chains) {
    // All value assignments on the chain.
    std::vector<std::vector<std::pair<int, int>>> partial{{}};
    for (int t : c) {
      std::vector<std::vector<std::pair<int, int>>> next;
      for (const auto& f : partial) {
        for (int v = 0; v < cap[t]; ++v) {
          auto g = f;
          g.push_back({t, v});
          next.push_back(std::move(g));
        }
      }
      partial = std::move(next);
    }
    for (auto& f : partial) tc.func.push_back(std::move(f));
  }
  std::sort(tc.func.begin(), tc.func.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  const int n = static_cast<int>(tc.func.size());
  std::vector<std::string> ids;
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    ids.push_back(func_id(tree, tc.func[a]));
    for (int b = 0; b < n; ++b) {
      bool extends = true;  // b extends a
      for (const auto& kv : tc.func[a]) {
        if (std::find(tc.func[b].begin(), tc.func[b].end(), kv) ==
            tc.func[b].end()) {
          extends = false;
          break;
        }
      }
      leq[a][b] = extends ? 1 : 0;
    }
  }
  FinitePoset u = FinitePoset::from_leq(std::move(ids), std::move(leq));

  std::vector<int> norm(n, root);
  for (int a = 0; a < n; ++a) {
    if (!tc.func[a].empty()) {
      // Domain is a chain; its join is its maximum.
      std::vector<int> dom;
      for (const auto& kv : tc.func[a]) dom.push_back(kv.first);
      norm[a] = *tree.greatest_of(dom);
    }
  }
  tc.nc = NormCovering(std::move(u), tree, std::move(norm));
  return tc;
}

std::variant<SigmaSelection, CapacityExhausted> sigma_select(
    const TreeCovering& tc,
    const std::function<std::vector<int>(int)>& exclusions) {
  const FinitePoset& tree = tc.tree;
  const int root = *tree.minimum();

  // phi(t) as a sorted chain.
  auto phi = [&](int t) {
    std::vector<int> out;
    for (int s : tree.down_set(t)) {
      if (s != root) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<int> value(tree.size(), -1);
  auto restriction = [&](int t) {
    std::vector<std::pair<int, int>> f;
    for (int s : phi(t)) f.push_back({s, value[s]});
    return tc.element_for(f);
  };

  for (int t : tree.linear_extension()) {
    if (t == root) continue;
    std::set<int> excluded;
    for (int s : tree.down_set(t)) {
      if (s == t) continue;
      for (int v : exclusions(restriction(s))) {
        for (const auto& kv : tc.func[v]) {
          if (kv.first == t) excluded.insert(kv.second);
        }
      }
    }
    int chosen = -1;
    for (int x = 0; x < tc.capacity[t]; ++x) {
      if (!excluded.count(x)) {
        chosen = x;
        break;
      }
    }
    if (chosen < 0) return CapacityExhausted{t};
    value[t] = chosen;
  }

  SigmaSelection sel;
  sel.ideal_gen.resize(tree.size());
  for (int t = 0; t < tree.size(); ++t) sel.ideal_gen[t] = restriction(t);
  return sel;
}

}  // namespace latvar
