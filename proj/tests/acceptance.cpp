#include <cstdlib>
#include <iostream>
#include <string>

#include "succinct/acceptance.hpp"

// Usage: acceptance [seed] [criterion...]
int main(int argc, char** argv) {
  using namespace succinct;
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : default_acceptance_seed;
  int failures = 0;
  auto run = [&](int id) {
    const CriterionResult r = run_criterion(id, seed);
    failures += !r.passed;
    std::cout << format_result(r) << std::endl;
  };
  if (argc > 2)
    for (int i = 2; i < argc; ++i) run(std::atoi(argv[i]));
  else
    for (int id = 1; id <= acceptance_criteria; ++id) run(id);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
