#pragma once

#include <string>
#include <vector>

namespace thermobar {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus status) noexcept;

/// A numerical check always carries its residual and the tolerance it was judged against.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  double residual = 0.0;
  double tolerance = 0.0;

  static CheckResult judge(std::string name, double residual, double tolerance);
  static CheckResult skipped(std::string name);
};

bool all_passed(const std::vector<CheckResult>& checks) noexcept;

}  // namespace thermobar
