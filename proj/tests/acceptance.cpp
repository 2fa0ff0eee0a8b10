// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>

#include "suite.hpp"

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all = true;
  int total = static_cast<int>(thetalab::suite::criteria().size());
  for (int id = 1; id <= total; ++id) {
    if (!only.empty() && !only.count(id)) continue;
    auto c = thetalab::suite::run({id}).at(0);
    std::printf("%s %2d %s: %s (%.1fs)\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str(),
                c.seconds);
    std::fflush(stdout);
    all = all && c.pass;
  }
  return all ? 0 : 1;
}
