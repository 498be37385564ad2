#include <cstdio>

#include "sqw/suite.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= sqw::kCriterionCount; ++id) {
    const sqw::CriterionResult r = sqw::run_criterion(id);
    std::printf("%s\n", sqw::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of %d criteria passed\n", sqw::kCriterionCount - failed, sqw::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
