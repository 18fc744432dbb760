#include "latvar/fixtures.hpp"

#include <algorithm>

namespace latvar {

FiniteLattice fixture_t1() {
  return FiniteLattice::from_covers(
      {"bot", "p", "a5", "q", "a1", "a2", "c", "a3", "a4", "u", "a6", "v",
       "top"},
      {{"bot", "p"},
       {"bot", "a5"},
       {"bot", "q"},
       {"p", "a1"},
       {"p", "a2"},
       {"p", "c"},
       {"a5", "c"},
       {"q", "a3"},
       {"q", "a4"},
       {"q", "c"},
       {"a1", "u"},
       {"a2", "u"},
       {"a3", "v"},
       {"a4", "v"},
       {"c", "u"},
       {"c", "a6"},
       {"c", "v"},
       {"u", "top"},
       {"a6", "top"},
       {"v", "top"}});
}

FiniteLattice remove_elements(const FiniteLattice& l,
                              const std::vector<std::string>& names) {
  std::vector<int> drop;
  for (const auto& name : names) drop.push_back(l.index_of(name));
  std::vector<int> keep;
  for (int e = 0; e < l.size(); ++e) {
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) {
      keep.push_back(e);
    }
  }
  return sublattice_on(l, keep);
}

FiniteLattice fixture_t2() { return remove_elements(fixture_t1(), {"a5"}); }

FiniteLattice fixture_t3() { return remove_elements(fixture_t1(), {"a6"}); }

FiniteLattice fixture_t4() {
  return FiniteLattice::from_covers(
      {"bot", "p", "a5", "t1", "a1", "a2", "c", "a4", "u", "a6", "t2", "top"},
      {{"bot", "p"},
       {"bot", "a5"},
       {"bot", "t1"},
       {"p", "a1"},
       {"p", "a2"},
       {"p", "c"},
       {"a5", "c"},
       {"t1", "a4"},
       {"t1", "c"},
       {"a1", "u"},
       {"a2", "u"},
       {"a4", "t2"},
       {"c", "u"},
       {"c", "a6"},
       {"c", "t2"},
       {"u", "top"},
       {"a6", "top"},
       {"t2", "top"}});
}

FiniteLattice fixture_s1() {
  return remove_elements(fixture_t1(), {"a2", "a3"});
}

FiniteLattice fixture_s2() {
  return remove_elements(fixture_t1(), {"a5", "a6"});
}

FiniteLattice fixture_s0() {
  return remove_elements(fixture_t1(), {"a2", "a3", "a5", "a6"});
}

}  // namespace latvar
