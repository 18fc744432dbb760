// Runs the eight acceptance steps and prints one line per step.
#include <cstdio>

#include "latvar/selfcheck.hpp"

int main() {
  bool all_ok = true;
  int k = 0;
  for (const auto& r : latvar::reproduce_all()) {
    ++k;
    std::printf("%d. %s: %s (%s)\n", k, r.name.c_str(),
                r.ok ? "pass" : "FAIL", r.detail.c_str());
    all_ok = all_ok && r.ok;
  }
  return all_ok ? 0 : 1;
}
