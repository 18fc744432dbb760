#include "latvar/diagram.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "latvar/fixtures.hpp"

namespace latvar {

namespace {

template <typename Node>
void validate_diagram(const FinitePoset& index, const std::vector<Node>& nodes,
                      const std::map<std::pair<int, int>, std::vector<int>>&
                          edges) {
  if (static_cast<int>(nodes.size()) != index.size()) {
    throw std::invalid_argument("node count does not match index");
  }
  for (int i = 0; i < index.size(); ++i) {
    for (int j = 0; j < index.size(); ++j) {
      auto it = edges.find({i, j});
      if (!index.leq(i, j)) {
        if (it != edges.end()) {
          throw std::invalid_argument("edge on incomparable pair");
        }
        continue;
      }
      if (it == edges.end()) {
        throw std::invalid_argument("missing edge for comparable pair");
      }
      const auto& m = it->second;
      if (static_cast<int>(m.size()) != nodes[i].size()) {
        throw std::invalid_argument("edge table size mismatch");
      }
      for (int e : m) {
        if (e < 0 || e >= nodes[j].size()) {
          throw std::invalid_argument("edge value out of range");
        }
      }
      if (i == j) {
        for (int e = 0; e < nodes[i].size(); ++e) {
          if (m[e] != e) throw std::invalid_argument("identity edge required");
        }
      }
    }
  }
  for (int i = 0; i < index.size(); ++i) {
    for (int j = 0; j < index.size(); ++j) {
      if (!index.leq(i, j)) continue;
      for (int k = 0; k < index.size(); ++k) {
        if (!index.leq(j, k)) continue;
        const auto& ij = edges.at({i, j});
        const auto& jk = edges.at({j, k});
        const auto& ik = edges.at({i, k});
        for (int e = 0; e < nodes[i].size(); ++e) {
          if (jk[ij[e]] != ik[e]) {
            throw std::invalid_argument("diagram is not functorial");
          }
        }
      }
    }
  }
}

std::map<std::pair<int, int>, std::vector<int>> derive_composites(
    const FinitePoset& index, const std::vector<int>& node_sizes,
    const std::map<std::pair<int, int>, std::vector<int>>& cover_edges) {
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (int i = 0; i < index.size(); ++i) {
    std::vector<int> id(node_sizes[i]);
    for (int e = 0; e < node_sizes[i]; ++e) id[e] = e;
    edges[{i, i}] = std::move(id);
  }
  // Comparable pairs in order of interval height, composing through any
  // lower cover of the top; path independence is checked afterwards.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < index.size(); ++i) {
    for (int j = 0; j < index.size(); ++j) {
      if (index.lt(i, j)) pairs.push_back({i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
    int ha = index.height(a.second) - index.height(a.first);
    int hb = index.height(b.second) - index.height(b.first);
    return ha < hb;
  });
  for (auto [i, j] : pairs) {
    if (index.covers(i, j)) {
      auto it = cover_edges.find({i, j});
      if (it == cover_edges.end()) {
        throw std::invalid_argument("missing cover edge");
      }
      edges[{i, j}] = it->second;
      continue;
    }
    int mid = -1;
    for (int k : index.lower_covers(j)) {
      if (index.leq(i, k)) {
        mid = k;
        break;
      }
    }
    const auto& lower = edges.at({i, mid});
    const auto& upper = edges.at({mid, j});
    std::vector<int> m(node_sizes[i]);
    for (int e = 0; e < node_sizes[i]; ++e) m[e] = upper[lower[e]];
    edges[{i, j}] = std::move(m);
  }
  return edges;
}

}  // namespace

SemDiagram::SemDiagram(FinitePoset index, std::vector<JoinSemilattice0> nodes,
                       std::map<std::pair<int, int>, std::vector<int>> edges)
    : index_(std::move(index)), nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  validate_diagram(index_, nodes_, edges_);
  for (const auto& [key, m] : edges_) edge_hom(key.first, key.second);
}

SemDiagram SemDiagram::from_covers(
    FinitePoset index, std::vector<JoinSemilattice0> nodes,
    const std::map<std::pair<int, int>, std::vector<int>>& cover_edges) {
  std::vector<int> sizes;
  for (const auto& n : nodes) sizes.push_back(n.size());
  auto edges = derive_composites(index, sizes, cover_edges);
  return SemDiagram(std::move(index), std::move(nodes), std::move(edges));
}

const std::vector<int>& SemDiagram::edge(int i, int j) const {
  return edges_.at({i, j});
}

Join0Hom SemDiagram::edge_hom(int i, int j) const {
  return Join0Hom(nodes_[i], nodes_[j], edges_.at({i, j}));
}

SemDiagram SemDiagram::restrict(const std::vector<int>& lower_subset) const {
  for (int i : lower_subset) {
    for (int j = 0; j < index_.size(); ++j) {
      if (index_.leq(j, i) &&
          std::find(lower_subset.begin(), lower_subset.end(), j) ==
              lower_subset.end()) {
        throw std::invalid_argument("subset is not downward closed");
      }
    }
  }
  const int m = static_cast<int>(lower_subset.size());
  std::vector<std::string> ids;
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  std::vector<JoinSemilattice0> nodes;
  for (int a = 0; a < m; ++a) {
    ids.push_back(index_.id(lower_subset[a]));
    nodes.push_back(nodes_[lower_subset[a]]);
    for (int b = 0; b < m; ++b) {
      leq[a][b] = index_.leq(lower_subset[a], lower_subset[b]) ? 1 : 0;
    }
  }
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (index_.leq(lower_subset[a], lower_subset[b])) {
        edges[{a, b}] = edges_.at({lower_subset[a], lower_subset[b]});
      }
    }
  }
  return SemDiagram(FinitePoset::from_leq(std::move(ids), std::move(leq)),
                    std::move(nodes), std::move(edges));
}

LatDiagram::LatDiagram(FinitePoset index, std::vector<FiniteLattice> nodes,
                       std::map<std::pair<int, int>, std::vector<int>> edges)
    : index_(std::move(index)), nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  validate_diagram(index_, nodes_, edges_);
  for (const auto& [key, m] : edges_) edge_hom(key.first, key.second);
}

LatDiagram LatDiagram::from_covers(
    FinitePoset index, std::vector<FiniteLattice> nodes,
    const std::map<std::pair<int, int>, std::vector<int>>& cover_edges) {
  std::vector<int> sizes;
  for (const auto& n : nodes) sizes.push_back(n.size());
  auto edges = derive_composites(index, sizes, cover_edges);
  return LatDiagram(std::move(index), std::move(nodes), std::move(edges));
}

const std::vector<int>& LatDiagram::edge(int i, int j) const {
  return edges_.at({i, j});
}

LatticeHom LatDiagram::edge_hom(int i, int j) const {
  return LatticeHom(nodes_[i], nodes_[j], edges_.at({i, j}));
}

LatDiagram LatDiagram::restrict(const std::vector<int>& lower_subset) const {
  const int m = static_cast<int>(lower_subset.size());
  std::vector<std::string> ids;
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  std::vector<FiniteLattice> nodes;
  for (int a = 0; a < m; ++a) {
    ids.push_back(index_.id(lower_subset[a]));
    nodes.push_back(nodes_[lower_subset[a]]);
    for (int b = 0; b < m; ++b) {
      leq[a][b] = index_.leq(lower_subset[a], lower_subset[b]) ? 1 : 0;
    }
  }
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (index_.leq(lower_subset[a], lower_subset[b])) {
        edges[{a, b}] = edges_.at({lower_subset[a], lower_subset[b]});
      }
    }
  }
  return LatDiagram(FinitePoset::from_leq(std::move(ids), std::move(leq)),
                    std::move(nodes), std::move(edges));
}

ConcDiagram apply_conc(const LatDiagram& a) {
  const auto& index = a.index();
  std::vector<ConLattice> cons;
  std::vector<JoinSemilattice0> nodes;
  for (int i = 0; i < index.size(); ++i) {
    cons.push_back(con_lattice(a.node(i)));
    nodes.push_back(cons.back().semilattice());
  }
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (int i = 0; i < index.size(); ++i) {
    for (int j = 0; j < index.size(); ++j) {
      if (index.leq(i, j)) {
        edges[{i, j}] = con_of_hom(a.edge_hom(i, j), cons[i], cons[j]).map;
      }
    }
  }
  return ConcDiagram{SemDiagram(index, std::move(nodes), std::move(edges)),
                     std::move(cons)};
}

namespace {

std::vector<std::vector<int>> all_semilattice_isos(const JoinSemilattice0& s1,
                                                   const JoinSemilattice0& s2,
                                                   size_t max_count) {
  std::vector<std::vector<int>> out;
  const int n = s1.size();
  if (n != s2.size()) return out;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int a) {
    if (out.size() >= max_count) return;
    if (a == n) {
      out.push_back(map);
      return;
    }
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      bool ok = true;
      for (int x = 0; x < a && ok; ++x) {
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
  return out;
}

}  // namespace

std::optional<NaturalIso> natural_iso(const SemDiagram& d1,
                                      const SemDiagram& d2) {
  const auto& index = d1.index();
  if (!index.same_order(d2.index())) {
    throw std::invalid_argument("diagrams have different index posets");
  }
  const int m = index.size();
  std::vector<std::vector<std::vector<int>>> candidates(m);
  for (int i = 0; i < m; ++i) {
    candidates[i] = all_semilattice_isos(d1.node(i), d2.node(i), SIZE_MAX);
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<int> choice(m, -1);
  std::optional<NaturalIso> found;
  std::function<void(int)> rec = [&](int i) {
    if (found) return;
    if (i == m) {
      NaturalIso iso;
      for (int k = 0; k < m; ++k) iso.maps.push_back(candidates[k][choice[k]]);
      found = std::move(iso);
      return;
    }
    for (size_t c = 0; c < candidates[i].size() && !found; ++c) {
      choice[i] = static_cast<int>(c);
      bool ok = true;
      for (int j = 0; j < m && ok; ++j) {
        if (choice[j] < 0 || j == i) continue;
        // commutation on whichever direction is comparable
        for (auto [lo, hi] : {std::pair{i, j}, std::pair{j, i}}) {
          if (!index.leq(lo, hi)) continue;
          const auto& e1 = d1.edge(lo, hi);
          const auto& e2 = d2.edge(lo, hi);
          const auto& xl = candidates[lo][choice[lo]];
          const auto& xh = candidates[hi][choice[hi]];
          for (int e = 0; e < d1.node(lo).size(); ++e) {
            if (xh[e1[e]] != e2[xl[e]]) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) rec(i + 1);
    }
    choice[i] = -1;
  };
  rec(0);
  return found;
}

std::optional<NaturalIso> verify_lifting(const LatDiagram& a,
                                         const SemDiagram& d) {
  return natural_iso(apply_conc(a).diagram, d);
}

std::vector<FiniteLattice> pool_from_hs(const VarietySpec& spec,
                                        const JoinSemilattice0& target,
                                        const LiftBounds& bounds) {
  auto target_lattice = FiniteLattice::validate(target.poset());
  std::map<std::string, FiniteLattice> found;
  for (const auto& g : spec.generators) {
    for (const auto& subset :
         all_sublattices(g, 1, std::min(g.size(), bounds.max_size),
                         bounds.visited_cap)) {
      auto sub = sublattice_on(g, subset);
      if (length(sub) > bounds.max_length) continue;
      auto con = con_lattice(sub);
      for (const auto& theta : con.congruences) {
        auto q = quotient(sub, theta).lattice;
        if (q.size() > bounds.max_size) continue;
        if (!find_isomorphism(con_lattice(q).lattice, target_lattice)) {
          continue;
        }
        found.emplace(canonical_form(q), q);
      }
    }
  }
  std::vector<FiniteLattice> out;
  for (auto& [key, l] : found) out.push_back(std::move(l));
  std::sort(out.begin(), out.end(),
            [](const FiniteLattice& a, const FiniteLattice& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return canonical_form(a) < canonical_form(b);
            });
  return out;
}

LiftSearchResult bounded_lift_search(
    const SemDiagram& d, const VarietySpec& spec, const LiftBounds& bounds,
    const std::vector<std::vector<FiniteLattice>>* pools) {
  const auto& index = d.index();
  const int m = index.size();

  LiftSearchResult result;
  result.certificate.bounds =
      "max_size=" + std::to_string(bounds.max_size) +
      " max_length=" + std::to_string(bounds.max_length) +
      " visited_cap=" + std::to_string(bounds.visited_cap);

  if (m == 0) {
    result.certificate.trace.push_back("empty index: no lifting required");
    return result;
  }

  std::vector<std::vector<FiniteLattice>> node_pools;
  if (pools) {
    node_pools = *pools;
  } else {
    for (int i = 0; i < m; ++i) {
      auto search = members_with_conc(spec, d.node(i), bounds.max_size,
                                      bounds.max_length, bounds.visited_cap);
      if (!search.complete) result.certificate.search_complete = false;
      node_pools.push_back(std::move(search.members));
    }
  }

  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < m; ++i) {
    for (int j : index.upper_covers(i)) covers.push_back({i, j});
  }

  std::vector<int> assignment(m, -1);
  std::function<bool(int)> assign = [&](int k) -> bool {
    if (k == m) {
      std::vector<ConLattice> cons;
      for (int i = 0; i < m; ++i) {
        cons.push_back(con_lattice(node_pools[i][assignment[i]]));
      }
      // per-node isomorphism choices Con A_i -> D(i)
      std::vector<std::vector<std::vector<int>>> isos(m);
      for (int i = 0; i < m; ++i) {
        isos[i] =
            all_semilattice_isos(cons[i].semilattice(), d.node(i), SIZE_MAX);
        if (isos[i].empty()) {
          result.certificate.trace.push_back(
              "assignment node " + index.id(i) +
              ": congruence lattice does not match");
          return false;
        }
      }
      std::vector<int> iso_choice(m, 0);
      std::function<bool(int)> pick_iso = [&](int i) -> bool {
        if (i == m) {
          // find compatible homs per cover edge, then assemble
          std::map<std::pair<int, int>, std::vector<std::vector<int>>>
              edge_choices;
          for (auto [lo, hi] : covers) {
            const auto& a_lo = node_pools[lo][assignment[lo]];
            const auto& a_hi = node_pools[hi][assignment[hi]];
            const auto& xi_lo = isos[lo][iso_choice[lo]];
            const auto& xi_hi = isos[hi][iso_choice[hi]];
            // required Con map: xi_hi^{-1} . D(lo<=hi) . xi_lo
            std::vector<int> inv(xi_hi.size());
            for (size_t e = 0; e < xi_hi.size(); ++e) inv[xi_hi[e]] =
                static_cast<int>(e);
            std::vector<int> required(cons[lo].size());
            for (int e = 0; e < cons[lo].size(); ++e) {
              required[e] = inv[d.edge(lo, hi)[xi_lo[e]]];
            }
            std::vector<std::vector<int>> good;
            for (const auto& h : all_lattice_homs(a_lo, a_hi)) {
              if (con_of_hom(h, cons[lo], cons[hi]).map == required) {
                good.push_back(h.map);
              }
            }
            if (good.empty()) {
              result.certificate.trace.push_back(
                  "edge " + index.id(lo) + "->" + index.id(hi) +
                  ": no homomorphism with the required induced map");
              return false;
            }
            edge_choices[{lo, hi}] = std::move(good);
          }
          // choose one hom per cover and try to assemble a functor
          std::vector<size_t> pick(covers.size(), 0);
          std::function<bool(size_t)> choose = [&](size_t e) -> bool {
            if (e == covers.size()) {
              std::map<std::pair<int, int>, std::vector<int>> cover_edges;
              for (size_t c = 0; c < covers.size(); ++c) {
                cover_edges[covers[c]] = edge_choices[covers[c]][pick[c]];
              }
              std::vector<FiniteLattice> nodes;
              for (int i = 0; i < m; ++i) {
                nodes.push_back(node_pools[i][assignment[i]]);
              }
              try {
                auto lifting =
                    LatDiagram::from_covers(index, nodes, cover_edges);
                auto witness = verify_lifting(lifting, d);
                if (witness) {
                  result.lifting = std::move(lifting);
                  result.witness = std::move(witness);
                  return true;
                }
              } catch (const std::invalid_argument&) {
                // non-functorial assembly; try the next combination
              }
              return false;
            }
            for (size_t c = 0; c < edge_choices[covers[e]].size(); ++c) {
              pick[e] = c;
              if (choose(e + 1)) return true;
            }
            return false;
          };
          return choose(0);
        }
        for (size_t c = 0; c < isos[i].size(); ++c) {
          iso_choice[i] = static_cast<int>(c);
          if (pick_iso(i + 1)) return true;
        }
        return false;
      };
      return pick_iso(0);
    }
    if (node_pools[k].empty()) {
      result.certificate.trace.push_back("node " + index.id(k) +
                                         ": empty candidate pool");
      return false;
    }
    for (size_t c = 0; c < node_pools[k].size(); ++c) {
      assignment[k] = static_cast<int>(c);
      if (assign(k + 1)) return true;
    }
    return false;
  };
  assign(0);
  if (!result.lifting && result.certificate.trace.empty()) {
    result.certificate.trace.push_back(
        "all assignments exhausted without a lifting");
  }
  return result;
}

SemDiagram square_boolean_diagram() {
  auto idx = FinitePoset::from_covers(
      {"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}});
  auto b4 = JoinSemilattice0::of(FiniteLattice::boolean_lattice(4));
  auto b2 = JoinSemilattice0::of(FiniteLattice::boolean_lattice(2));
  auto b1 = JoinSemilattice0::of(FiniteLattice::chain(2));

  // elements of 2^n are bitmasks in construction order
  std::vector<int> phi1(16), phi2(16), psi(4);
  for (int s = 0; s < 16; ++s) {
    phi1[s] = ((s & 0b0011) ? 1 : 0) | ((s & 0b1100) ? 2 : 0);
    phi2[s] = ((s & 0b1001) ? 1 : 0) | ((s & 0b0110) ? 2 : 0);
  }
  for (int s = 0; s < 4; ++s) psi[s] = s ? 1 : 0;

  std::map<std::pair<int, int>, std::vector<int>> covers;
  covers[{0, 1}] = phi1;
  covers[{0, 2}] = phi2;
  covers[{1, 3}] = psi;
  covers[{2, 3}] = psi;
  return SemDiagram::from_covers(idx, {b4, b2, b2, b1}, covers);
}

LatDiagram fixture_square_diagram() {
  auto idx = FinitePoset::from_covers(
      {"0", "1", "2", "3"}, {{"0", "1"}, {"0", "2"}, {"1", "3"}, {"2", "3"}});
  auto s0 = fixture_s0();
  auto s1 = fixture_s1();
  auto s2 = fixture_s2();
  auto t1 = fixture_t1();
  auto incl = [](const FiniteLattice& a, const FiniteLattice& b) {
    std::vector<int> m(a.size());
    for (int e = 0; e < a.size(); ++e) m[e] = b.index_of(a.id(e));
    return m;
  };
  std::map<std::pair<int, int>, std::vector<int>> covers;
  covers[{0, 1}] = incl(s0, s1);
  covers[{0, 2}] = incl(s0, s2);
  covers[{1, 3}] = incl(s1, t1);
  covers[{2, 3}] = incl(s2, t1);
  return LatDiagram::from_covers(idx, {s0, s1, s2, t1}, covers);
}

namespace {

bool has_quotient_two(const FiniteLattice& l) {
  for (const auto& theta : con_lattice(l).congruences) {
    if (theta.num_blocks == 2) return true;
  }
  return false;
}

bool con_is_two_squared(const FiniteLattice& l) {
  auto con = con_lattice(l);
  return con.size() == 4 &&
         find_isomorphism(con.lattice, FiniteLattice::boolean_lattice(2))
             .has_value();
}

// Sublattices of b3 maximal with respect to Con ~ 2^2.
std::vector<std::vector<int>> maximal_con22_sublattices(
    const FiniteLattice& b3) {
  std::vector<std::vector<int>> with_property;
  for (const auto& subset : all_sublattices(b3, 1, b3.size())) {
    if (con_is_two_squared(sublattice_on(b3, subset))) {
      with_property.push_back(subset);
    }
  }
  std::vector<std::vector<int>> out;
  for (const auto& s : with_property) {
    bool maximal = true;
    for (const auto& t : with_property) {
      if (t.size() > s.size() &&
          std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complement_of(const FiniteLattice& l,
                               const std::vector<std::string>& names) {
  std::vector<int> drop;
  for (const auto& n : names) drop.push_back(l.index_of(n));
  std::vector<int> keep;
  for (int e = 0; e < l.size(); ++e) {
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) keep.push_back(e);
  }
  return keep;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw CertificateFailure("certificate step failed: " + what);
}

}  // namespace

NonLiftingCertificate section7_certificate(const VarietySpec& spec2) {
  NonLiftingCertificate cert;
  cert.bounds = "exhaustive over simple length-4 members and all sublattices";

  auto t2 = fixture_t2();
  auto t3 = fixture_t3();
  auto t4 = fixture_t4();
  {
    require(spec2.generators.size() == 3, "three generators expected");
    bool g2 = false, g3 = false, g4 = false;
    for (const auto& g : spec2.generators) {
      if (find_isomorphism(g, t2)) g2 = true;
      if (find_isomorphism(g, t3)) g3 = true;
      if (find_isomorphism(g, t4)) g4 = true;
    }
    require(g2 && g3 && g4, "generators are the three 12-element fixtures");
  }

  // (a) the diagram's maps separate zero, so any lifting consists of
  // embeddings.
  auto d = square_boolean_diagram();
  require(d.edge_hom(0, 1).separates_zero() &&
              d.edge_hom(0, 2).separates_zero() &&
              d.edge_hom(1, 3).separates_zero(),
          "diagram maps separate zero");
  cert.trace.push_back(
      "(a) all three diagram maps separate 0; a lifting would consist of "
      "sublattice inclusions into a simple top lattice of length 4");

  // (b) candidates for the top lattice.
  auto census = members_with_conc(
      spec2, JoinSemilattice0::of(FiniteLattice::chain(2)), 12, 4);
  require(census.complete, "simple-member census complete");
  std::vector<FiniteLattice> length4;
  for (const auto& mbr : census.members) {
    if (length(mbr) == 4) length4.push_back(mbr);
  }
  require(length4.size() == 4, "four simple length-4 members");
  auto t4a4 = remove_elements(t4, {"a4"});
  int matched = 0;
  for (const auto& mbr : length4) {
    if (find_isomorphism(mbr, t2) || find_isomorphism(mbr, t3) ||
        find_isomorphism(mbr, t4) || find_isomorphism(mbr, t4a4)) {
      ++matched;
    }
  }
  require(matched == 4, "census members are the expected four");
  require(!find_embeddings(t4a4, t4, 1).empty(),
          "the non-maximal census member embeds into a maximal one");
  cert.trace.push_back(
      "(b) simple length-4 members: exactly the three generators plus one "
      "11-element lattice embeddable into the third; top lattice cases "
      "reduce to the three generators");

  struct Case {
    std::string name;
    const FiniteLattice& b3;
    std::vector<std::vector<std::string>> expected_maximal;
    std::vector<std::vector<std::string>> expected_survivors;
  };
  std::vector<Case> cases = {
      {"T2", t2, {{"a1"}, {"a2"}, {"a3"}, {"a4"}, {"a6"}}, {{"a6"}}},
      {"T3", t3, {{"a1"}, {"a2"}, {"a3"}, {"a4"}, {"a5"}}, {{"a5"}}},
      {"T4",
       t4,
       {{"a1"}, {"a2"}, {"a5"}, {"a6"}, {"a4", "t1"}, {"a4", "t2"}},
       {{"a1"}, {"a2"}}},
  };

  for (const auto& c : cases) {
    // (c) sublattices maximal w.r.t. Con ~ 2^2
    auto maximal = maximal_con22_sublattices(c.b3);
    std::vector<std::vector<int>> expected;
    for (const auto& names : c.expected_maximal) {
      expected.push_back(complement_of(c.b3, names));
    }
    std::sort(expected.begin(), expected.end());
    require(maximal == expected,
            c.name + ": maximal sublattices with square congruence lattice");

    // (d) exclude candidates with a quotient isomorphic to 2
    std::vector<std::vector<int>> survivors;
    for (const auto& s : maximal) {
      if (!has_quotient_two(sublattice_on(c.b3, s))) survivors.push_back(s);
    }
    std::vector<std::vector<int>> expected_surv;
    for (const auto& names : c.expected_survivors) {
      expected_surv.push_back(complement_of(c.b3, names));
    }
    std::sort(expected_surv.begin(), expected_surv.end());
    require(survivors == expected_surv, c.name + ": survivor list");

    // (e) every surviving pair has a square congruence lattice on the
    // intersection, never the required 2^4.
    for (const auto& s1 : survivors) {
      for (const auto& s2 : survivors) {
        std::vector<int> both;
        std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                              std::back_inserter(both));
        auto inter = sublattice_on(c.b3, both);
        require(is_modular(inter) && length(inter) == 4,
                c.name + ": intersection is modular of length 4");
        require(con_is_two_squared(inter),
                c.name + ": intersection congruence lattice is 2^2, not 2^4");
      }
    }
    cert.trace.push_back(
        "(" + c.name + ") " + std::to_string(maximal.size()) +
        " maximal square-congruence sublattices, " +
        std::to_string(survivors.size()) +
        " without a two-element quotient; every surviving intersection has "
        "congruence lattice 2^2, contradicting the required 2^4");
  }

  return cert;
}

SubdiagramReport finite_subdiagram_consistency(const SemDiagram& d,
                                               const VarietySpec& spec,
                                               const LiftBounds& bounds) {
  SubdiagramReport report;
  auto full = bounded_lift_search(d, spec, bounds);
  if (!full.lifting) {
    report.checked.push_back("no lifting found for the full diagram");
    return report;
  }
  const auto& index = d.index();
  const int m = index.size();
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) subset.push_back(i);
    }
    bool lower = true;
    for (int i : subset) {
      for (int j = 0; j < m; ++j) {
        if (index.leq(j, i) &&
            std::find(subset.begin(), subset.end(), j) == subset.end()) {
          lower = false;
        }
      }
    }
    if (!lower) continue;
    if (subset.empty()) {
      report.checked.push_back("{} vacuously lifts");
      continue;
    }
    auto restricted = full.lifting->restrict(subset);
    bool ok = verify_lifting(restricted, d.restrict(subset)).has_value();
    if (!ok) report.coherent = false;
    std::string names = "{";
    for (size_t k = 0; k < subset.size(); ++k) {
      if (k) names += ",";
      names += index.id(subset[k]);
    }
    report.checked.push_back(names + (ok ? "} lifts" : "} FAILS"));
  }
  return report;
}

}  // namespace latvar
