#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "thermobar/discretization.hpp"

namespace thermobar::presets {

struct Zero {};

struct ConstantTheta {
  double value = 1.0;
};

/// Gaussian bump over the whole bar, shifted linearly so it vanishes at x = 0 and x = L3.
struct GaussianDisplacement {
  double center = 1.5;
  double width = 0.25;
  double amplitude = 1.0;
};

/// Uniform samples in [-amplitude, amplitude] per grid value, then one 3-point averaging pass.
struct RandomSeeded {
  std::optional<std::uint64_t> seed;
  double amplitude = 1.0;
};

struct KernelVector {
  double scale = 1.0;
};

/// Interface values of the outer samplers are overwritten with the middle values.
struct Custom {
  FieldFunctions samplers;
};

}  // namespace thermobar::presets

namespace thermobar {

using InitialPreset =
    std::variant<presets::Zero, presets::ConstantTheta, presets::GaussianDisplacement,
                 presets::RandomSeeded, presets::KernelVector, presets::Custom>;

struct InitialDataSpec {
  InitialPreset preset = presets::Zero{};
  /// Remove the kernel component after sampling, so the state lies in range(A).
  bool well_prepared = false;
};

StateVector make_initial_state(const ModelConfig& cfg, const Discretization& disc,
                               const InitialDataSpec& spec);

}  // namespace thermobar
