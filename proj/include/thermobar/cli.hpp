#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thermobar/initial_data.hpp"
#include "thermobar/model.hpp"

namespace thermobar::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kDefaultCells = 64;

struct GridSpec {
  int n1 = kDefaultCells;
  int n2 = kDefaultCells;
  int n3 = kDefaultCells;
  bool defaulted = true;  // no [grid] section or grid keys in the file
};

struct RunOptions {
  double dt = 1e-2;
  double t_max = 200.0;
  double l_min = 0.1;
  double l_max = 200.0;
  int num = 400;
  std::string spacing = "log";
  std::string initial = "random";  // zero | constant_theta | gaussian | random | kernel
  std::optional<std::uint64_t> seed;
  double amplitude = 1.0;
  double theta_value = 1.0;
  double center = 1.5;
  double width = 0.25;
  bool well_prepared = true;
  double window_fraction = 0.5;
  int snapshot_stride = 0;
};

struct ParsedConfig {
  ModelConfig model;
  GridSpec grid;
  RunOptions run;
  RawConfig entries;  // every key as written, for the manifest echo
};

/// key = value lines, '#' or ';' comments, optional [model] / [grid] / [run] sections.
/// Throws ParseError (with line and column), UnknownKey, or a model validation error.
ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::string& path);

InitialDataSpec initial_data_spec(const RunOptions& run);

/// Fixed 17 significant digits, '.' separator.
std::string format_double(double x);

/// Full tool entry point; returns the process exit code
/// (0 ok, 1 check failure, 2 usage or config error, 3 numerical failure).
int run(int argc, const char* const* argv);

}  // namespace thermobar::cli
