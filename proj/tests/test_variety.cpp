#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latvar/fixtures.hpp"
#include "latvar/variety.hpp"

#include <set>

using namespace latvar;

namespace {

FiniteLattice pentagon() {
  return FiniteLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "c"}, {"0", "b"}, {"c", "1"}, {"b", "1"}});
}

}  // namespace

TEST_CASE("subdirect irreducibility basics") {
  CHECK(is_subdirectly_irreducible(FiniteLattice::chain(2)));
  CHECK(!is_subdirectly_irreducible(FiniteLattice::chain(1)));
  CHECK(!is_subdirectly_irreducible(FiniteLattice::boolean_lattice(2)));
  CHECK(is_subdirectly_irreducible(FiniteLattice::m_n(3)));
  // The pentagon has a monolith but a proper nontrivial congruence.
  CHECK(is_subdirectly_irreducible(pentagon()));
  CHECK(!is_simple(pentagon()));
}

TEST_CASE("varieties generated by tiny lattices") {
  auto v2chain = make_variety({FiniteLattice::chain(2)});
  REQUIRE(v2chain.si.size() == 1);
  CHECK(v2chain.si[0].size() == 2);

  auto vsquare = make_variety({FiniteLattice::boolean_lattice(2)});
  REQUIRE(vsquare.si.size() == 1);
  CHECK(vsquare.si[0].size() == 2);

  auto v3chain = make_variety({FiniteLattice::chain(3)});
  REQUIRE(v3chain.si.size() == 1);
  CHECK(v3chain.si[0].size() == 2);
  CHECK(is_finitely_semisimple(v3chain).ok);
}

TEST_CASE("non-semisimple variety generated by the pentagon") {
  auto v = make_variety({pentagon()});
  auto r = is_finitely_semisimple(v);
  CHECK(!r.ok);
  REQUIRE(r.counterexample >= 0);
  CHECK(find_isomorphism(v.si[r.counterexample], pentagon()));
}

TEST_CASE("membership tests") {
  auto v = make_variety({FiniteLattice::boolean_lattice(2)});
  CHECK(contains(v, FiniteLattice::chain(2)));
  CHECK(contains(v, FiniteLattice::chain(1)));
  CHECK(contains(v, FiniteLattice::boolean_lattice(3)));
  CHECK(!contains(v, FiniteLattice::m_n(3)));
  for (const auto& s : v.si) CHECK(contains(v, s));
}

TEST_CASE("trivial congruence target") {
  auto v = make_variety({FiniteLattice::chain(2)});
  auto r = members_with_conc(v, JoinSemilattice0::of(FiniteLattice::chain(1)),
                             4, 4);
  REQUIRE(r.members.size() == 1);
  CHECK(r.members[0].size() == 1);
}

TEST_CASE("members of a small variety with two-element congruence lattice") {
  auto v = make_variety({FiniteLattice::m_n(3)});
  // SI members: 2 and M3, both simple.
  CHECK(is_finitely_semisimple(v).ok);
  auto r = members_with_conc(v, JoinSemilattice0::of(FiniteLattice::chain(2)),
                             8, 4);
  CHECK(r.complete);
  // Simple members up to iso: 2 and M3.
  REQUIRE(r.members.size() == 2);
  CHECK(r.members[0].size() == 2);
  CHECK(find_isomorphism(r.members[1], FiniteLattice::m_n(3)));
}

TEST_CASE("members with square congruence lattice include products") {
  auto v = make_variety({FiniteLattice::boolean_lattice(2)});
  auto r = members_with_conc(
      v, JoinSemilattice0::of(FiniteLattice::boolean_lattice(2)), 6, 4);
  CHECK(r.complete);
  REQUIRE(!r.members.empty());
  bool has_square = false;
  for (const auto& m : r.members) {
    CHECK(find_isomorphism(con_lattice(m).lattice,
                           FiniteLattice::boolean_lattice(2)));
    CHECK(contains(v, m));
    if (m.size() == 4) has_square = true;
  }
  CHECK(has_square);
}

TEST_CASE("the variety of the 12-element generators") {
  auto v = make_variety({fixture_t2(), fixture_t3(), fixture_t4()});
  CHECK(is_finitely_semisimple(v).ok);
  CHECK(contains(v, fixture_t2()));
  CHECK(!contains(v, fixture_t1()));
  CHECK(contains(v, FiniteLattice::chain(2)));
  CHECK(contains(v, fixture_s0()));

  // Simple length-4 members, up to isomorphism.
  auto census = members_with_conc(
      v, JoinSemilattice0::of(FiniteLattice::chain(2)), 12, 4);
  CHECK(census.complete);
  std::vector<FiniteLattice> expected = {
      remove_elements(fixture_t4(), {"a4"}), fixture_t2(), fixture_t3(),
      fixture_t4()};
  int length4 = 0;
  for (const auto& m : census.members) {
    if (length(m) != 4) continue;
    ++length4;
    bool matched = false;
    for (const auto& e : expected) {
      if (find_isomorphism(m, e)) matched = true;
    }
    CHECK(matched);
  }
  CHECK(length4 == 4);
}
