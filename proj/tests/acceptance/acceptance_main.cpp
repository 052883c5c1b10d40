// One line per criterion (or sub-criterion); exit status is nonzero if any line fails.
#include "fuchs/acceptance.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  int only = 0;
  unsigned threads = 4;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);
    else if (std::strcmp(argv[i], "--threads") == 0) threads = static_cast<unsigned>(std::atoi(argv[i + 1]));
    else {
      std::cerr << "usage: acceptance_tests [--criterion k] [--threads t]\n";
      return 1;
    }
  }
  bool all = true;
  for (int k = 1; k <= fuchs::kCriterionCount; ++k) {
    if (only != 0 && k != only) continue;
    for (const auto& line : fuchs::run_criterion(k, threads)) {
      std::cout << fuchs::format_line(line) << std::endl;
      all = all && line.pass;
    }
  }
  return all ? 0 : 1;
}
