#pragma once

#include <string>
#include <vector>

namespace fuchs {

struct CriterionLine {
  std::string id;  // "1".."10", sub-checks as "5a".."5f"
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

std::vector<CriterionLine> run_criterion(int criterion, unsigned threads = 4);
std::string format_line(const CriterionLine& line);

}  // namespace fuchs
