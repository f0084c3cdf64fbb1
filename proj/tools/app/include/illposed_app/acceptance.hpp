#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "illposed/io.hpp"

namespace illposed::app {

struct AcceptanceConfig {
  int n = 256;
  int N = 128;
  int m = 12;
  std::uint64_t seed = 0xC0FFEE;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  Json data;
};

inline constexpr int kCriterionCount = 12;
inline constexpr double kTotalRuntimeBudget = 60.0;

CriterionResult run_criterion(int id, const AcceptanceConfig& cfg);

std::vector<CriterionResult> run_acceptance(
    const AcceptanceConfig& cfg, const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_line(const CriterionResult& r);
Json to_json(const CriterionResult& r);

}  // namespace illposed::app
