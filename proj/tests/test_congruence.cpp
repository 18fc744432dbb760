#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latvar/congruence.hpp"
#include "latvar/fixtures.hpp"

#include <set>

using namespace latvar;

namespace {

LatticeHom inclusion(const FiniteLattice& sub, const FiniteLattice& l) {
  std::vector<int> m(sub.size());
  for (int e = 0; e < sub.size(); ++e) m[e] = l.index_of(sub.id(e));
  return LatticeHom(sub, l, std::move(m));
}

// Apply a recorded translation sequence to an element.
int apply_ops(const FiniteLattice& l, int x,
              const std::vector<std::pair<char, int>>& ops) {
  for (auto [op, t] : ops) x = (op == 'm') ? l.meet(x, t) : l.join(x, t);
  return x;
}

}  // namespace

TEST_CASE("principal congruence on chains and squares") {
  auto c2 = FiniteLattice::chain(2);
  CHECK(principal_congruence(c2, 0, 1).num_blocks == 1);

  auto b2 = FiniteLattice::boolean_lattice(2);
  int bot = b2.bottom(), top = b2.top();
  auto at = atoms(b2);
  auto c = principal_congruence(b2, bot, at[0]);
  CHECK(c.num_blocks == 2);
  CHECK(c.same(bot, at[0]));
  CHECK(c.same(at[1], top));
  CHECK(!c.same(bot, at[1]));
}

TEST_CASE("the 13-element fixture is simple") {
  auto t1 = fixture_t1();
  CHECK(principal_congruence(t1, t1.index_of("bot"), t1.index_of("a5"))
            .num_blocks == 1);
  auto con = con_lattice(t1);
  CHECK(con.size() == 2);
  CHECK(is_simple(t1));
}

TEST_CASE("parallel and serial principal tables agree") {
  auto s1 = fixture_s1();
  CHECK(principal_table(s1) == principal_table_serial(s1));
}

TEST_CASE("congruence lattices of the corner fixtures") {
  CHECK(find_isomorphism(con_lattice(fixture_s0()).lattice,
                         FiniteLattice::boolean_lattice(4)));
  CHECK(find_isomorphism(con_lattice(fixture_s1()).lattice,
                         FiniteLattice::boolean_lattice(2)));
  CHECK(find_isomorphism(con_lattice(fixture_s2()).lattice,
                         FiniteLattice::boolean_lattice(2)));
  CHECK(find_isomorphism(con_lattice(FiniteLattice::chain(3)).lattice,
                         FiniteLattice::boolean_lattice(2)));
}

TEST_CASE("quotients by the extremes") {
  auto s1 = fixture_s1();
  auto qi = quotient(s1, congruence_identity(s1));
  CHECK(find_isomorphism(qi.lattice, s1));
  auto qf = quotient(s1, congruence_full(s1));
  CHECK(qf.lattice.size() == 1);
}

TEST_CASE("a proper quotient of the 11-element fixture") {
  auto s1 = fixture_s1();
  auto theta =
      principal_congruence(s1, s1.index_of("bot"), s1.index_of("a5"));
  CHECK(theta.num_blocks == 5);
  auto q = quotient(s1, theta);
  CHECK(q.lattice.size() == 5);
  CHECK(find_isomorphism(q.lattice, FiniteLattice::m_n(3)));
  CHECK(con_lattice(q.lattice).size() == 2);
  LatticeHom proj(s1, q.lattice, q.projection);
  CHECK(proj.is_surjective());
}

TEST_CASE("induced congruence maps of the fixture inclusions") {
  auto t1 = fixture_t1();
  auto s0 = fixture_s0();
  auto s1 = fixture_s1();
  auto con_t1 = con_lattice(t1);
  auto con_s0 = con_lattice(s0);
  auto con_s1 = con_lattice(s1);

  auto f = con_of_hom(inclusion(s1, t1), con_s1, con_t1);
  CHECK(f.is_surjective());
  CHECK(f.separates_zero());
  CHECK(f.source.size() == 4);
  CHECK(f.target.size() == 2);

  auto g = con_of_hom(inclusion(s0, s1), con_s0, con_s1);
  CHECK(g.is_surjective());
  CHECK(g.source.size() == 16);
  CHECK(g.target.size() == 4);

  auto id = con_of_hom(LatticeHom::identity(s1), con_s1, con_s1);
  for (int i = 0; i < con_s1.size(); ++i) CHECK(id.map[i] == i);
}

TEST_CASE("induced maps compose") {
  auto t1 = fixture_t1();
  auto s0 = fixture_s0();
  auto s1 = fixture_s1();
  auto con_t1 = con_lattice(t1);
  auto con_s0 = con_lattice(s0);
  auto con_s1 = con_lattice(s1);
  auto f = inclusion(s1, t1);
  auto g = inclusion(s0, s1);
  auto lhs = con_of_hom(compose(f, g), con_s0, con_t1);
  auto rhs = compose(con_of_hom(f, con_s1, con_t1),
                     con_of_hom(g, con_s0, con_s1));
  CHECK(lhs.map == rhs.map);
}

TEST_CASE("entailment agrees with the lattice of congruences") {
  auto b2 = FiniteLattice::boolean_lattice(2);
  int bot = b2.bottom();
  auto at = atoms(b2);

  auto w0 = malcev_entailment(b2, {bot, bot}, {});
  REQUIRE(w0.has_value());
  CHECK(w0->chain == std::vector<int>{bot});

  // The two atom congruences are incomparable.
  CHECK(!malcev_entailment(b2, {bot, at[1]}, {{bot, at[0]}}).has_value());

  auto w1 = malcev_entailment(b2, {bot, at[0]}, {{bot, at[0]}});
  REQUIRE(w1.has_value());
  CHECK(w1->steps.size() == 1);

  // Collapsing both atoms collapses everything.
  auto w2 = malcev_entailment(b2, {bot, b2.top()},
                              {{bot, at[0]}, {bot, at[1]}});
  REQUIRE(w2.has_value());
  CHECK(w2->chain.front() == bot);
  CHECK(w2->chain.back() == b2.top());
  // Replay each step from its recorded generator pair.
  for (const auto& step : w2->steps) {
    int lhs = apply_ops(b2, step.generator.first, step.ops);
    int rhs = apply_ops(b2, step.generator.second, step.ops);
    CHECK(((lhs == step.from && rhs == step.to) ||
           (lhs == step.to && rhs == step.from)));
  }
}

TEST_CASE("witness replay on the 13-element fixture") {
  auto t1 = fixture_t1();
  int x = t1.index_of("bot"), y = t1.index_of("top");
  auto w = malcev_entailment(t1, {x, y},
                             {{t1.index_of("bot"), t1.index_of("a5")}});
  REQUIRE(w.has_value());
  for (const auto& step : w->steps) {
    int lhs = apply_ops(t1, step.generator.first, step.ops);
    int rhs = apply_ops(t1, step.generator.second, step.ops);
    CHECK(((lhs == step.from && rhs == step.to) ||
           (lhs == step.to && rhs == step.from)));
  }
  for (size_t k = 0; k + 1 < w->chain.size(); ++k) {
    CHECK(w->steps[k].from == w->chain[k]);
    CHECK(w->steps[k].to == w->chain[k + 1]);
  }
}

TEST_CASE("meet irreducible congruences") {
  auto t1 = fixture_t1();
  auto con = con_lattice(t1);
  auto mi = meet_irreducible(con);
  REQUIRE(mi.size() == 1);
  CHECK(con.congruences[mi[0]] == congruence_identity(t1));

  auto con_s0 = con_lattice(fixture_s0());
  CHECK(meet_irreducible(con_s0).size() == 4);
}

TEST_CASE("boolean decomposition of the 9-element fixture") {
  auto s0 = fixture_s0();
  // At the full congruence every meet irreducible lands in q and the
  // quotient by alpha is trivial, so the product is the four 2-chains.
  auto r = boolean_decomposition(s0, congruence_full(s0));
  CHECK(r.hypothesis_ok);
  CHECK(r.q.size() == 4);
  CHECK(r.is_isomorphism);

  // At identity q is empty and the map degenerates to the identity.
  auto r0 = boolean_decomposition(s0, congruence_identity(s0));
  CHECK(r0.hypothesis_ok);
  CHECK(r0.q.empty());
  CHECK(r0.is_isomorphism);
}

TEST_CASE("boolean decomposition on the square") {
  auto b2 = FiniteLattice::boolean_lattice(2);
  auto r = boolean_decomposition(b2, congruence_full(b2));
  CHECK(r.hypothesis_ok);
  CHECK(r.q.size() == 2);
  CHECK(r.is_isomorphism);
}

TEST_CASE("congruences print as sorted block lists") {
  auto c3 = FiniteLattice::chain(3);
  auto theta = principal_congruence(c3, 0, 1);
  CHECK(congruence_to_string(c3, theta) == "{{0,1},{2}}");
}
