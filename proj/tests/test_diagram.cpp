#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "latvar/diagram.hpp"
#include "latvar/fixtures.hpp"

using namespace latvar;

namespace {

SemDiagram single_node(const JoinSemilattice0& s) {
  std::map<std::pair<int, int>, std::vector<int>> edges;
  std::vector<int> id(s.size());
  for (int e = 0; e < s.size(); ++e) id[e] = e;
  edges[{0, 0}] = id;
  return SemDiagram(FinitePoset::chain(1), {s}, edges);
}

}  // namespace

TEST_CASE("square boolean diagram is functorial") {
  auto d = square_boolean_diagram();
  CHECK(d.index().size() == 4);
  CHECK(d.node(0).size() == 16);
  CHECK(d.node(1).size() == 4);
  CHECK(d.node(2).size() == 4);
  CHECK(d.node(3).size() == 2);

  // the derived 0 -> 3 composite agrees along both legs
  const auto& e01 = d.edge(0, 1);
  const auto& e02 = d.edge(0, 2);
  const auto& e13 = d.edge(1, 3);
  const auto& e23 = d.edge(2, 3);
  const auto& e03 = d.edge(0, 3);
  for (int s = 0; s < 16; ++s) {
    CHECK(e13[e01[s]] == e03[s]);
    CHECK(e23[e02[s]] == e03[s]);
  }
  // only 0 maps to 0 on every leg
  CHECK(d.edge_hom(0, 1).separates_zero());
  CHECK(d.edge_hom(0, 2).separates_zero());
  CHECK(d.edge_hom(1, 3).separates_zero());
}

TEST_CASE("non functorial edges are rejected") {
  auto idx = FinitePoset::chain(3);
  auto two = JoinSemilattice0::of(FiniteLattice::chain(2));
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (int i = 0; i < 3; ++i) edges[{i, i}] = {0, 1};
  edges[{0, 1}] = {0, 1};
  edges[{1, 2}] = {0, 1};
  edges[{0, 2}] = {0, 0};  // disagrees with the composite
  CHECK_THROWS_AS(SemDiagram(idx, {two, two, two}, edges),
                  std::invalid_argument);
}

TEST_CASE("restriction keeps a lower subset") {
  auto d = square_boolean_diagram();
  auto r = d.restrict({0, 1});
  CHECK(r.index().size() == 2);
  CHECK(r.node(0).size() == 16);
  CHECK(r.node(1).size() == 4);
  CHECK(r.edge(0, 1) == d.edge(0, 1));
  CHECK_THROWS_AS(d.restrict({1, 3}), std::invalid_argument);
}

TEST_CASE("conc of the fixture square matches the boolean square") {
  auto a = fixture_square_diagram();
  auto conc = apply_conc(a);
  CHECK(conc.diagram.node(0).size() == 16);
  CHECK(conc.diagram.node(1).size() == 4);
  CHECK(conc.diagram.node(2).size() == 4);
  CHECK(conc.diagram.node(3).size() == 2);

  auto witness = verify_lifting(a, square_boolean_diagram());
  REQUIRE(witness.has_value());
  REQUIRE(witness->maps.size() == 4);
  for (int i = 0; i < 4; ++i) {
    std::vector<int> seen(witness->maps[i].size(), 0);
    for (int v : witness->maps[i]) seen[v] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) ==
          static_cast<long>(seen.size()));
  }
}

TEST_CASE("a diagram lifts its own conc image") {
  auto a = fixture_square_diagram();
  auto conc = apply_conc(a);
  CHECK(verify_lifting(a, conc.diagram).has_value());
}

TEST_CASE("natural iso respects the edges, not just the nodes") {
  // two single-edge diagrams on 2^1 -> 2^1: identity vs constant-to-zero
  auto two = JoinSemilattice0::of(FiniteLattice::chain(2));
  auto idx = FinitePoset::chain(2);
  std::map<std::pair<int, int>, std::vector<int>> e1, e2;
  e1[{0, 0}] = e1[{1, 1}] = {0, 1};
  e2 = e1;
  e1[{0, 1}] = {0, 1};
  e2[{0, 1}] = {0, 0};
  SemDiagram d1(idx, {two, two}, e1);
  SemDiagram d2(idx, {two, two}, e2);
  CHECK(natural_iso(d1, d1).has_value());
  CHECK_FALSE(natural_iso(d1, d2).has_value());
}

TEST_CASE("bounded search with explicit pools finds the fixture square") {
  auto v1 = make_variety({fixture_t1()});
  std::vector<std::vector<FiniteLattice>> pools = {
      {fixture_s0()}, {fixture_s1()}, {fixture_s2()}, {fixture_t1()}};
  auto result =
      bounded_lift_search(square_boolean_diagram(), v1, LiftBounds{}, &pools);
  REQUIRE(result.lifting.has_value());
  REQUIRE(result.witness.has_value());
  CHECK(verify_lifting(*result.lifting, square_boolean_diagram()).has_value());
  CHECK(result.lifting->node(0).size() == 9);
  CHECK(result.lifting->node(3).size() == 13);
}

TEST_CASE("bounded search reports failure with a trace") {
  auto v1 = make_variety({fixture_t1()});
  // a two-element pool cannot produce a 2^2 congruence lattice
  std::vector<std::vector<FiniteLattice>> pools = {{FiniteLattice::chain(2)}};
  auto d = single_node(JoinSemilattice0::of(FiniteLattice::boolean_lattice(2)));
  auto result = bounded_lift_search(d, v1, LiftBounds{}, &pools);
  CHECK_FALSE(result.lifting.has_value());
  CHECK_FALSE(result.certificate.trace.empty());
}

TEST_CASE("default pools handle small nodes") {
  auto v1 = make_variety({fixture_t1()});
  auto d = single_node(JoinSemilattice0::of(FiniteLattice::chain(2)));
  auto result = bounded_lift_search(d, v1, LiftBounds{4, 2});
  REQUIRE(result.lifting.has_value());
  CHECK(is_simple(result.lifting->node(0)));

  // constant diagram at the one-element semilattice
  auto one = JoinSemilattice0::of(FiniteLattice::chain(1));
  std::map<std::pair<int, int>, std::vector<int>> edges;
  for (int i = 0; i < 2; ++i) {
    for (int j = i; j < 2; ++j) edges[{i, j}] = {0};
  }
  SemDiagram constant(FinitePoset::chain(2), {one, one}, edges);
  auto trivial = bounded_lift_search(constant, v1, LiftBounds{4, 2});
  REQUIRE(trivial.lifting.has_value());
  CHECK(trivial.lifting->node(0).size() == 1);
  CHECK(trivial.lifting->node(1).size() == 1);
}

TEST_CASE("quotient pool collects the right congruence lattices") {
  auto v1 = make_variety({fixture_t1()});
  auto target = JoinSemilattice0::of(FiniteLattice::boolean_lattice(2));
  auto pool = pool_from_hs(v1, target, LiftBounds{});
  CHECK_FALSE(pool.empty());
  auto square = FiniteLattice::boolean_lattice(2);
  bool has_s1 = false;
  for (const auto& l : pool) {
    CHECK(find_isomorphism(con_lattice(l).lattice, square).has_value());
    if (find_isomorphism(l, fixture_s1())) has_s1 = true;
  }
  CHECK(has_s1);
}

TEST_CASE("restricting the found lifting lifts the restricted diagram") {
  auto a = fixture_square_diagram();
  auto d = square_boolean_diagram();
  for (const auto& subset :
       {std::vector<int>{0}, {0, 1}, {0, 2}, {0, 1, 2}, {0, 1, 2, 3}}) {
    CHECK(verify_lifting(a.restrict(subset), d.restrict(subset)).has_value());
  }
}

TEST_CASE("subdiagram consistency on a small diagram") {
  auto two = FiniteLattice::chain(2);
  auto v = make_variety({FiniteLattice::boolean_lattice(2)});
  auto s = JoinSemilattice0::of(two);
  std::map<std::pair<int, int>, std::vector<int>> edges;
  edges[{0, 0}] = edges[{1, 1}] = {0, 1};
  edges[{0, 1}] = {0, 1};
  SemDiagram d(FinitePoset::chain(2), {s, s}, edges);
  auto report = finite_subdiagram_consistency(d, v, LiftBounds{4, 2});
  CHECK(report.coherent);
  CHECK(report.checked.size() == 3);  // {}, {0}, {0,1}
}

TEST_CASE("the exclusion certificate closes all three cases") {
  auto v2 = make_variety({fixture_t2(), fixture_t3(), fixture_t4()});
  auto cert = section7_certificate(v2);
  REQUIRE(cert.trace.size() == 5);
  CHECK(cert.trace[2].find("T2") == 1);
  CHECK(cert.trace[2].find("5 maximal") != std::string::npos);
  CHECK(cert.trace[2].find("1 without") != std::string::npos);
  CHECK(cert.trace[3].find("T3") == 1);
  CHECK(cert.trace[4].find("T4") == 1);
  CHECK(cert.trace[4].find("6 maximal") != std::string::npos);
  CHECK(cert.trace[4].find("2 without") != std::string::npos);
  CHECK(cert.search_complete);
}

TEST_CASE("the certificate rejects a wrong variety") {
  // dropping the third generator changes the simple-member census
  auto broken = make_variety({fixture_t2(), fixture_t3()});
  CHECK_THROWS_AS(section7_certificate(broken), CertificateFailure);
}
