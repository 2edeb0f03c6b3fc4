// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Optional arguments select criteria by number. Exit status is 1 if any
// selected criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "facenum/verify.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= facenum::criterion_count; ++id) ids.push_back(id);
  }

  int failed = 0;
  for (int id : ids) {
    if (id < 1 || id > facenum::criterion_count) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    const facenum::CriterionResult r = facenum::run_criterion(id);
    std::cout << facenum::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
