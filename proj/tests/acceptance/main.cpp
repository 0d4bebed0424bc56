#include "acceptance/criteria.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = acceptance::kDefaultSeed;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc)
      seed = std::stoull(argv[++i]);
    else
      only.push_back(std::stoi(a));
  }
  auto results = acceptance::run_acceptance(seed, only, &std::cout);
  int failed = 0;
  for (auto& r : results) failed += !r.pass;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed" << std::endl;
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
