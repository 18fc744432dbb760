#include "latvar/condensate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace latvar {

namespace {

// Mixed-radix counter over the given sizes; calls f on every tuple.
template <typename F>
void for_each_tuple(const std::vector<int>& sizes, F&& f) {
  std::vector<int> t(sizes.size(), 0);
  while (true) {
    f(t);
    size_t k = 0;
    while (k < sizes.size() && ++t[k] == sizes[k]) t[k++] = 0;
    if (k == sizes.size()) return;
  }
}

int semilattice_top(const JoinSemilattice0& s) {
  int t = s.zero();
  for (int e = 0; e < s.size(); ++e) t = s.join(t, e);
  return t;
}

}  // namespace

Condensate::Condensate(NormCovering nc, SemDiagram d)
    : nc_(std::move(nc)), d_(std::move(d)) {
  if (!nc_.I().same_order(d_.index())) {
    throw std::invalid_argument("covering index does not match the diagram");
  }
}

bool Condensate::is_support(const std::vector<int>& values,
                            const Kernel& v) const {
  if (static_cast<int>(values.size()) != nc_.U().size()) {
    throw std::invalid_argument("tuple size does not match the covering");
  }
  for (int u = 0; u < nc_.U().size(); ++u) {
    int w = kernel_project(nc_.U(), v, u);
    if (values[u] != d_.edge(nc_.norm(w), nc_.norm(u))[values[w]]) {
      return false;
    }
  }
  return true;
}

std::vector<int> Condensate::join(const std::vector<int>& a,
                                  const std::vector<int>& b) const {
  std::vector<int> out(a.size());
  for (size_t u = 0; u < a.size(); ++u) {
    out[u] = node_at(static_cast<int>(u)).join(a[u], b[u]);
  }
  return out;
}

std::vector<int> Condensate::zero() const {
  std::vector<int> out(nc_.U().size());
  for (int u = 0; u < nc_.U().size(); ++u) out[u] = node_at(u).zero();
  return out;
}

bool Condensate::leq(const std::vector<int>& a,
                     const std::vector<int>& b) const {
  for (size_t u = 0; u < a.size(); ++u) {
    if (!node_at(static_cast<int>(u)).leq(a[u], b[u])) return false;
  }
  return true;
}

std::vector<std::vector<int>> Condensate::supported_by(const Kernel& v) const {
  std::vector<int> sizes;
  for (int w : v.members) sizes.push_back(node_at(w).size());
  std::vector<std::vector<int>> out;
  for_each_tuple(sizes, [&](const std::vector<int>& t) {
    std::map<int, int> x;
    for (size_t k = 0; k < v.members.size(); ++k) x[v.members[k]] = t[k];
    out.push_back(cond_from_restriction(*this, v, x).values);
  });
  return out;
}

CondElement cond_from_restriction(const Condensate& c, const Kernel& v,
                                  const std::map<int, int>& x) {
  const auto& u = c.covering().U();
  for (int w : v.members) {
    auto it = x.find(w);
    if (it == x.end() || it->second < 0 ||
        it->second >= c.node_at(w).size()) {
      throw std::invalid_argument("restriction tuple does not cover V");
    }
  }
  CondElement a;
  a.declared_support = v;
  a.values.resize(u.size());
  for (int e = 0; e < u.size(); ++e) {
    int w = kernel_project(u, v, e);
    a.values[e] =
        c.diagram().edge(c.covering().norm(w), c.covering().norm(e))[x.at(w)];
  }
  return a;
}

Kernel smallest_support(const Condensate& c, const CondElement& a) {
  const auto& u = c.covering().U();
  if (!c.is_support(a.values, a.declared_support)) {
    throw std::invalid_argument("declared support is not a support");
  }
  const auto& base = a.declared_support.members;
  if (base.size() > 20) {
    throw std::invalid_argument("declared support too large to search");
  }
  std::vector<Kernel> supports;
  for (unsigned long mask = 0; mask < (1ul << base.size()); ++mask) {
    std::vector<int> subset;
    for (size_t k = 0; k < base.size(); ++k) {
      if (mask & (1ul << k)) subset.push_back(base[k]);
    }
    if (!is_kernel(u, subset)) continue;
    Kernel v{subset};
    if (c.is_support(a.values, v)) supports.push_back(v);
  }
  // supports include the declared one, and their intersection is again
  // a support; uniqueness of the minimum follows
  Kernel least = supports.front();
  for (const auto& v : supports) least = kernel_intersection(u, least, v);
  if (!c.is_support(a.values, least)) {
    throw std::logic_error("support intersection failed to support");
  }
  return least;
}

int proj_at(const Condensate& c, const CondElement& a, int u) {
  return a.values[u];
}

int proj_ideal(const Condensate& c, const CondElement& a,
               const SharpIdeal& si, const Kernel& support) {
  if (!c.is_support(a.values, support)) {
    throw std::invalid_argument("not a support of the element");
  }
  int w = kernel_project(c.covering().U(), support, si.generator);
  return c.diagram().edge(c.covering().norm(w),
                          c.covering().norm(si.generator))[a.values[w]];
}

int proj_ideal(const Condensate& c, const CondElement& a,
               const SharpIdeal& si) {
  return proj_ideal(c, a, si, a.declared_support);
}

bool ThetaIdeal::contains(const Condensate& c, const CondElement& a) const {
  return proj_ideal(c, a, at) == c.node_at(at.generator).zero();
}

ThetaIdeal theta_ideal(const Condensate& c, const SharpIdeal& si) {
  const auto& u = c.covering().U();
  const int g = si.generator;
  ThetaIdeal theta;
  theta.at = si;
  theta.top.resize(u.size());
  for (int e = 0; e < u.size(); ++e) {
    theta.top[e] = e == g ? c.node_at(e).zero() : semilattice_top(c.node_at(e));
  }
  // the up-set of top is carried by the coordinate at the generator
  const auto& node = c.node_at(g);
  std::vector<std::vector<int>> up;
  for (int s = 0; s < node.size(); ++s) {
    auto b = theta.top;
    b[g] = s;
    up.push_back(std::move(b));
  }
  for (int s = 0; s < node.size(); ++s) {
    for (int t = 0; t < node.size(); ++t) {
      if (c.leq(up[s], up[t]) != node.leq(s, t)) {
        throw std::logic_error("theta up-set is not isomorphic to the node");
      }
      CondElement js{c.join(up[s], up[t]), Kernel{{}}};
      js.declared_support.members.resize(u.size());
      for (int e = 0; e < u.size(); ++e) js.declared_support.members[e] = e;
      if (js.values != up[node.join(s, t)]) {
        throw std::logic_error("theta up-set join mismatch");
      }
    }
  }
  return theta;
}

void check_natural(const SemDiagram& src, const SemDiagram& dst,
                   const NatTransform& h) {
  const auto& index = src.index();
  if (!index.same_order(dst.index())) {
    throw std::invalid_argument("diagrams have different index posets");
  }
  if (static_cast<int>(h.maps.size()) != index.size()) {
    throw std::invalid_argument("component count mismatch");
  }
  for (int i = 0; i < index.size(); ++i) {
    Join0Hom check(src.node(i), dst.node(i), h.maps[i]);
    for (int j = 0; j < index.size(); ++j) {
      if (!index.leq(i, j)) continue;
      for (int e = 0; e < src.node(i).size(); ++e) {
        if (h.maps[j][src.edge(i, j)[e]] != dst.edge(i, j)[h.maps[i][e]]) {
          throw std::invalid_argument("transformation is not natural");
        }
      }
    }
  }
}

CondElement cond_map(const Condensate& src, const Condensate& dst,
                     const NatTransform& h, const CondElement& a) {
  check_natural(src.diagram(), dst.diagram(), h);
  CondElement b;
  b.declared_support = a.declared_support;
  b.values.resize(a.values.size());
  for (size_t u = 0; u < a.values.size(); ++u) {
    b.values[u] =
        h.maps[src.covering().norm(static_cast<int>(u))][a.values[u]];
  }
  return b;
}

std::vector<int> TauMap::operator()(const std::vector<int>& beta) const {
  if (beta.size() != static_cast<size_t>(target.covering().U().size())) {
    throw std::invalid_argument("congruence tuple size mismatch");
  }
  for (size_t u = 0; u < beta.size(); ++u) {
    if (beta[u] < 0 || beta[u] >= target.node_at(static_cast<int>(u)).size()) {
      throw std::invalid_argument("congruence index out of range");
    }
  }
  // under the product decomposition the coordinate at u is exactly the
  // image congruence of the projection at u
  return beta;
}

std::vector<int> TauMap::projection_kernel(int u) const {
  const auto& nc = target.covering();
  std::vector<int> beta(nc.U().size());
  for (int w = 0; w < nc.U().size(); ++w) {
    const auto& con = node_cons[nc.norm(w)];
    beta[w] = w == u ? con.index_of(congruence_identity(con.carrier))
                     : con.index_of(congruence_full(con.carrier));
  }
  return beta;
}

namespace {

// Materializes the product of the diagram nodes over U and checks that
// breaking a congruence into coordinate congruences is an isomorphism
// onto the tuple space.
void verify_product_decomposition(const LatDiagram& a, const NormCovering& nc,
                                  const std::vector<ConLattice>& cons) {
  const int m = nc.U().size();
  std::vector<int> sizes(m);
  for (int u = 0; u < m; ++u) sizes[u] = a.node(nc.norm(u)).size();

  std::vector<std::vector<int>> elems;
  for_each_tuple(sizes, [&](const std::vector<int>& t) { elems.push_back(t); });
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> ids(n);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) {
    ids[x] = "p" + std::to_string(x);
    for (int y = 0; y < n; ++y) {
      bool le = true;
      for (int u = 0; u < m && le; ++u) {
        le = a.node(nc.norm(u)).poset().leq(elems[x][u], elems[y][u]);
      }
      leq[x][y] = le ? 1 : 0;
    }
  }
  auto prod = FiniteLattice::validate(FinitePoset::from_leq(ids, leq));
  auto con_prod = con_lattice(prod);

  std::vector<LatticeHom> projections;
  for (int u = 0; u < m; ++u) {
    std::vector<int> map(n);
    for (int x = 0; x < n; ++x) map[x] = elems[x][u];
    projections.emplace_back(prod, a.node(nc.norm(u)), map);
  }

  long expected = 1;
  for (int u = 0; u < m; ++u) expected *= cons[nc.norm(u)].size();
  if (con_prod.size() != expected) {
    throw QuasiLiftingFailure("product congruence count mismatch");
  }
  std::vector<Join0Hom> decompose;
  for (int u = 0; u < m; ++u) {
    decompose.push_back(
        con_of_hom(projections[u], con_prod, cons[nc.norm(u)]));
  }
  std::set<std::vector<int>> images;
  std::vector<std::vector<int>> tuples(con_prod.size());
  for (int b = 0; b < con_prod.size(); ++b) {
    tuples[b].resize(m);
    for (int u = 0; u < m; ++u) tuples[b][u] = decompose[u].map[b];
    if (!images.insert(tuples[b]).second) {
      throw QuasiLiftingFailure("product congruence decomposition collides");
    }
  }
  // order must be read off coordinatewise
  for (int b = 0; b < con_prod.size(); ++b) {
    for (int b2 = 0; b2 < con_prod.size(); ++b2) {
      bool le = con_leq(con_prod.congruences[b], con_prod.congruences[b2]);
      bool cle = true;
      for (int u = 0; u < m && cle; ++u) {
        cle = con_leq(cons[nc.norm(u)].congruences[tuples[b][u]],
                      cons[nc.norm(u)].congruences[tuples[b2][u]]);
      }
      if (le != cle) {
        throw QuasiLiftingFailure("product congruence order mismatch");
      }
    }
  }
}

}  // namespace

TauMap tau_map(const LatDiagram& a, const NormCovering& nc, long verify_cap) {
  auto conc = apply_conc(a);
  TauMap tau{Condensate(nc, conc.diagram), std::move(conc.cons), {}};

  long product = 1;
  bool small = true;
  for (int u = 0; u < nc.U().size() && small; ++u) {
    product *= a.node(nc.norm(u)).size();
    small = product <= verify_cap;
  }
  if (small) verify_product_decomposition(a, nc, tau.node_cons);

  for (const auto& si : extreme_ideals(nc)) {
    const int g = si.generator;
    auto theta = theta_ideal(tau.target, si);
    auto alpha = tau.projection_kernel(g);

    // join of {beta : tau(beta) lands in theta}, coordinatewise: the
    // coordinate at w is unconstrained away from g, and at g only the
    // values projecting to zero survive
    std::vector<int> sup = tau.target.zero();
    Kernel full{{}};
    full.members.resize(nc.U().size());
    for (int w = 0; w < nc.U().size(); ++w) full.members[w] = w;
    for (int w = 0; w < nc.U().size(); ++w) {
      for (int e = 0; e < tau.target.node_at(w).size(); ++e) {
        auto probe = tau.target.zero();
        probe[w] = e;
        if (theta.contains(tau.target, CondElement{tau(probe), full})) {
          sup = tau.target.join(sup, probe);
        }
      }
    }
    if (sup != alpha) {
      throw QuasiLiftingFailure("join over theta preimage is not the "
                                "projection kernel at " + nc.U().id(g));
    }

    // beta >= alpha pins every coordinate away from g; the map
    // beta |-> tau(beta) v top must carry this up-set isomorphically
    // onto the up-set of top
    const auto& node = tau.target.node_at(g);
    for (int s = 0; s < node.size(); ++s) {
      auto beta = alpha;
      beta[g] = s;
      auto image = tau.target.join(tau(beta), theta.top);
      auto expect = theta.top;
      expect[g] = s;
      if (image != expect) {
        throw QuasiLiftingFailure("quasi-lifting image mismatch at " +
                                  nc.U().id(g));
      }
      for (int t = 0; t < node.size(); ++t) {
        auto beta2 = alpha;
        beta2[g] = t;
        if (tau.target.leq(beta, beta2) != node.leq(s, t)) {
          throw QuasiLiftingFailure("quasi-lifting order mismatch at " +
                                    nc.U().id(g));
        }
      }
    }
    tau.report.checked.push_back(
        "extreme ideal at " + nc.U().id(g) + ": kernel and up-set of size " +
        std::to_string(node.size()) + " verified");
  }
  return tau;
}

}  // namespace latvar
