#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latvar/poset.hpp"

#include <algorithm>
#include <set>

using namespace latvar;

namespace {

// ⊥ below an n-element antichain.
FinitePoset bottom_plus_antichain(int n) {
  std::vector<std::string> ids{"bot"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
    covers.push_back({"bot", std::to_string(i)});
  }
  return FinitePoset::from_covers(ids, covers);
}

}  // namespace

TEST_CASE("construction from covers closes transitively") {
  auto p = FinitePoset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(p.index_of("a"), p.index_of("c")));
  CHECK(p.covers(p.index_of("a"), p.index_of("b")));
  CHECK(!p.covers(p.index_of("a"), p.index_of("c")));
}

TEST_CASE("cyclic cover input is rejected") {
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  std::invalid_argument);
}

TEST_CASE("duplicate ids are rejected") {
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "a"}, {}),
                  std::invalid_argument);
}

TEST_CASE("minimum, maximum, height, depth on a chain") {
  auto c = FinitePoset::chain(4);
  REQUIRE(c.minimum().has_value());
  REQUIRE(c.maximum().has_value());
  CHECK(c.id(*c.minimum()) == "0");
  CHECK(c.id(*c.maximum()) == "3");
  CHECK(c.height(*c.maximum()) == 3);
  CHECK(c.depth(*c.minimum()) == 3);
  CHECK(c.is_tree());
}

TEST_CASE("linear extension respects the order and is deterministic") {
  auto p = bottom_plus_antichain(3);
  auto le = p.linear_extension();
  REQUIRE(le.size() == 4);
  CHECK(p.id(le[0]) == "bot");
  CHECK(p.id(le[1]) == "0");
  CHECK(p.id(le[2]) == "1");
  CHECK(p.id(le[3]) == "2");
}

TEST_CASE("kernels of bottom plus 3-element antichain") {
  auto u = bottom_plus_antichain(3);
  int bot = u.index_of("bot");
  int e0 = u.index_of("0"), e1 = u.index_of("1");

  CHECK(is_kernel(u, {bot, e0}));
  CHECK(!is_kernel(u, {e0}));

  std::vector<int> all;
  for (int i = 0; i < u.size(); ++i) all.push_back(i);
  CHECK(is_kernel(u, all));

  auto v = make_kernel(u, {bot, e0});
  CHECK(kernel_project(u, v, e1) == bot);
  CHECK(kernel_project(u, v, e0) == e0);
}

TEST_CASE("kernel projection on a chain") {
  auto c = FinitePoset::chain(3);
  auto v = make_kernel(c, {0, 1});
  CHECK(kernel_project(c, v, 2) == 1);
}

TEST_CASE("kernel intersection on bottom plus 5-element antichain") {
  auto u = bottom_plus_antichain(5);
  int bot = u.index_of("bot");
  auto v = make_kernel(u, {bot, u.index_of("0"), u.index_of("1")});
  auto w = make_kernel(u, {bot, u.index_of("1"), u.index_of("2")});
  auto x = kernel_intersection(u, v, w);
  CHECK(x.members == std::vector<int>{bot, u.index_of("1")});
  CHECK(is_kernel(u, x.members));

  auto y = make_kernel(u, {bot, u.index_of("3")});
  auto z = kernel_intersection(u, v, y);
  CHECK(z.members == std::vector<int>{bot});
}

TEST_CASE("norm covering rejects non-monotone norms") {
  auto u = FinitePoset::chain(2);
  auto i = FinitePoset::chain(2);
  CHECK_THROWS_AS(NormCovering(u, i, {1, 0}), std::invalid_argument);
  NormCovering ok(u, i, {0, 1});
  CHECK(ok.norm(1) == 1);
}

TEST_CASE("sharp and extreme ideals of the 2-chain covering, capacity 3") {
  auto tc = build_tree_covering(FinitePoset::chain(2),
                                [](int) { return 3; });
  CHECK(tc.nc.U().size() == 4);
  CHECK(sharp_ideals(tc.nc).size() == 4);
  CHECK(extreme_ideals(tc.nc).size() == 4);
  CHECK(is_tight(tc.nc));

  // Empty function sits below the three singletons, all with norm t.
  int empty = tc.element_for({});
  CHECK(tc.nc.norm(empty) == *tc.tree.minimum());
  for (int v = 0; v < 3; ++v) {
    int e = tc.element_for({{1, v}});
    CHECK(tc.nc.U().covers(empty, e));
    CHECK(tc.nc.norm(e) == 1);
  }
}

TEST_CASE("constant norm leaves only maximal ideals extreme") {
  auto u = FinitePoset::chain(3);
  auto i = FinitePoset::chain(1);
  NormCovering nc(u, i, {0, 0, 0});
  auto ex = extreme_ideals(nc);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].generator == 2);
}

TEST_CASE("chain with strictly increasing norm is all extreme and tight") {
  auto u = FinitePoset::chain(3);
  NormCovering nc(u, u, {0, 1, 2});
  CHECK(extreme_ideals(nc).size() == 3);
  CHECK(is_tight(nc));
}

TEST_CASE("antichain over a 2-chain index is not tight") {
  auto u = FinitePoset::antichain(2);
  auto i = FinitePoset::chain(2);
  NormCovering nc(u, i, {0, 1});
  CHECK(!is_tight(nc));
}

TEST_CASE("tree covering of the 1-element tree") {
  auto tc = build_tree_covering(FinitePoset::chain(1), [](int) { return 5; });
  CHECK(tc.nc.U().size() == 1);
  CHECK(tc.nc.norm(0) == 0);
}

TEST_CASE("tree covering of the 3-chain with capacity 2 has 9 elements") {
  auto tc = build_tree_covering(FinitePoset::chain(3), [](int) { return 2; });
  CHECK(tc.nc.U().size() == 9);
  CHECK(is_tight(tc.nc));
}

TEST_CASE("tree covering of a non-chain tree") {
  auto t = FinitePoset::from_covers({"bot", "l", "r"},
                                    {{"bot", "l"}, {"bot", "r"}});
  auto tc = build_tree_covering(t, [](int) { return 2; });
  // {} plus two values at each of l and r; no chain contains both.
  CHECK(tc.nc.U().size() == 5);
  CHECK(is_tight(tc.nc));
}

TEST_CASE("build_tree_covering rejects non-trees") {
  auto square = FinitePoset::from_covers(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK_THROWS_AS(build_tree_covering(square, [](int) { return 2; }),
                  std::invalid_argument);
}

TEST_CASE("selection with no exclusions picks the all-zeros branch") {
  auto tc = build_tree_covering(FinitePoset::chain(3), [](int) { return 2; });
  auto r = sigma_select(tc, [](int) { return std::vector<int>{}; });
  auto* sel = std::get_if<SigmaSelection>(&r);
  REQUIRE(sel != nullptr);
  CHECK(sel->ideal_gen[1] == tc.element_for({{1, 0}}));
  CHECK(sel->ideal_gen[2] == tc.element_for({{1, 0}, {2, 0}}));
}

TEST_CASE("selection avoids an excluded value") {
  auto tc = build_tree_covering(FinitePoset::chain(2), [](int) { return 3; });
  int empty = tc.element_for({});
  int zero_branch = tc.element_for({{1, 0}});
  auto r = sigma_select(tc, [&](int u) {
    return u == empty ? std::vector<int>{zero_branch} : std::vector<int>{};
  });
  auto* sel = std::get_if<SigmaSelection>(&r);
  REQUIRE(sel != nullptr);
  CHECK(sel->ideal_gen[1] == tc.element_for({{1, 1}}));
}

TEST_CASE("selection reports exhaustion when every value is excluded") {
  auto tc = build_tree_covering(FinitePoset::chain(2), [](int) { return 1; });
  int empty = tc.element_for({});
  int only = tc.element_for({{1, 0}});
  auto r = sigma_select(tc, [&](int u) {
    return u == empty ? std::vector<int>{only} : std::vector<int>{};
  });
  auto* ex = std::get_if<CapacityExhausted>(&r);
  REQUIRE(ex != nullptr);
  CHECK(ex->tree_node == 1);
}
