#include "gct/acceptance.hpp"

#include <iostream>

int main() {
  int failed = 0;
  gct::run_acceptance([&failed](const gct::CriterionResult& r) {
    std::cout << gct::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (failed == 0 ? "all 11 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
