#pragma once

#include <map>
#include <string>

namespace thermobar {

enum class HeatLaw { Cattaneo, Fourier };

const char* to_string(HeatLaw law) noexcept;
HeatLaw parse_heat_law(const std::string& text);

/**
 * Geometry and material constants of the elastic / thermoelastic / elastic bar.
 *
 * The bar occupies [0, L3]; the thermoelastic part is [L1, L2]. a and b are the
 * squared wave speeds of the middle and outer parts, m the thermoelastic
 * coupling, k the conduction constant and tau the Cattaneo relaxation time
 * (ignored under Fourier's law).
 */
struct ModelConfig {
  double L1 = 1.0;
  double L2 = 2.0;
  double L3 = 3.0;
  double a = 1.0;
  double b = 1.0;
  double m = 1.0;
  double k = 1.0;
  double tau = 1.0;
  HeatLaw law = HeatLaw::Cattaneo;

  double middle_length() const noexcept { return L2 - L1; }
  bool cattaneo() const noexcept { return law == HeatLaw::Cattaneo; }
};

/// L = (1, 2, 3), a = b = m = k = tau = 1.
ModelConfig reference_config(HeatLaw law = HeatLaw::Cattaneo);

/// Throws thermobar::Error (NonPositiveParameter, BadOrdering) if an invariant is violated.
void validate(const ModelConfig& cfg);

using RawConfig = std::map<std::string, std::string>;

/// Builds a validated config from string key/value pairs. `tau` is required only for Cattaneo.
ModelConfig validate_config(const RawConfig& raw);

/// Closed-form stationary state: displacement zeta1 (middle) / zeta2 (outer), temperature zeta3.
struct KernelFunctions {
  double L1 = 0.0;
  double L2 = 0.0;
  double L3 = 0.0;
  double zeta1_slope = 0.0;
  double zeta1_offset = 1.0;
  double zeta2_slope = 0.0;
  double zeta2_right_offset = 0.0;  // zeta2(x) = slope * x + offset on [L2, L3]
  double zeta3 = 0.0;

  double zeta1(double x) const noexcept { return zeta1_slope * x + zeta1_offset; }
  double zeta2(double x) const noexcept {
    return x <= L1 ? zeta2_slope * x : zeta2_slope * x + zeta2_right_offset;
  }
  /// Displacement over the whole bar: zeta1 on [L1, L2], zeta2 elsewhere.
  double displacement(double x) const noexcept {
    return (x >= L1 && x <= L2) ? zeta1(x) : zeta2(x);
  }
};

KernelFunctions kernel_functions(const ModelConfig& cfg);

}  // namespace thermobar
