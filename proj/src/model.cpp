#include "thermobar/model.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "thermobar/errors.hpp"

namespace thermobar {

const char* to_string(HeatLaw law) noexcept {
  return law == HeatLaw::Cattaneo ? "Cattaneo" : "Fourier";
}

HeatLaw parse_heat_law(const std::string& text) {
  if (text == "Cattaneo" || text == "cattaneo") return HeatLaw::Cattaneo;
  if (text == "Fourier" || text == "fourier") return HeatLaw::Fourier;
  throw Error(ErrorCode::BadValue, "law must be Cattaneo or Fourier, got '" + text + "'");
}

ModelConfig reference_config(HeatLaw law) {
  ModelConfig cfg;
  cfg.law = law;
  return cfg;
}

namespace {

void require_positive(const char* name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::NonPositiveParameter,
                std::string(name) + " must be positive and finite, got " + std::to_string(value));
  }
}

double parse_number(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw Error(ErrorCode::BadValue, "key '" + key + "' is not a number: '" + text + "'");
  }
  return value;
}

}  // namespace

void validate(const ModelConfig& cfg) {
  require_positive("L1", cfg.L1);
  if (!(cfg.L1 < cfg.L2 && cfg.L2 < cfg.L3) || !std::isfinite(cfg.L3)) {
    throw Error(ErrorCode::BadOrdering, "require 0 < L1 < L2 < L3");
  }
  require_positive("a", cfg.a);
  require_positive("b", cfg.b);
  require_positive("m", cfg.m);
  require_positive("k", cfg.k);
  if (cfg.cattaneo()) require_positive("tau", cfg.tau);
}

ModelConfig validate_config(const RawConfig& raw) {
  auto get = [&](const char* key) -> const std::string& {
    auto it = raw.find(key);
    if (it == raw.end()) throw Error(ErrorCode::MissingKey, std::string("missing key '") + key + "'");
    return it->second;
  };

  ModelConfig cfg;
  cfg.law = parse_heat_law(get("law"));
  cfg.L1 = parse_number("L1", get("L1"));
  cfg.L2 = parse_number("L2", get("L2"));
  cfg.L3 = parse_number("L3", get("L3"));
  cfg.a = parse_number("a", get("a"));
  cfg.b = parse_number("b", get("b"));
  cfg.m = parse_number("m", get("m"));
  cfg.k = parse_number("k", get("k"));
  if (cfg.cattaneo()) {
    cfg.tau = parse_number("tau", get("tau"));
  } else if (auto it = raw.find("tau"); it != raw.end()) {
    // unused under Fourier, but a malformed value is still an error
    cfg.tau = parse_number("tau", it->second);
  }
  validate(cfg);
  return cfg;
}

KernelFunctions kernel_functions(const ModelConfig& cfg) {
  validate(cfg);
  const double L1 = cfg.L1, L2 = cfg.L2, L3 = cfg.L3;
  KernelFunctions z;
  z.L1 = L1;
  z.L2 = L2;
  z.L3 = L3;
  z.zeta1_slope = (L2 - L1 - L3) / (L1 * L3);
  z.zeta1_offset = 1.0;
  z.zeta2_slope = (L2 - L1) / (L1 * L3);
  z.zeta2_right_offset = -(L2 - L1) / L1;
  z.zeta3 = (cfg.a * (L2 - L1 - L3) - cfg.b * (L2 - L1)) / (cfg.m * L1 * L3);
  return z;
}

}  // namespace thermobar
