#include "thermobar/report.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace thermobar {

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

CheckResult CheckResult::judge(std::string name, double residual, double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  // NaN residuals fail
  r.status = (residual <= tolerance) ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult CheckResult::skipped(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  r.status = CheckStatus::Skipped;
  r.residual = std::nan("");
  return r;
}

bool all_passed(const std::vector<CheckResult>& checks) noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

}  // namespace thermobar
