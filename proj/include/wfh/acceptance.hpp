#pragma once

#include <string>
#include <vector>

namespace wfh {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 16;
// Whole-suite wall-clock budget in seconds.
constexpr double kSuiteBudgetSeconds = 300.0;

std::string criterion_name(int id);
CriterionResult run_criterion(int id);
// ids empty: all criteria in order.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

}  // namespace wfh
