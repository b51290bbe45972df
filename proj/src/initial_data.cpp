#include "thermobar/initial_data.hpp"

#include <cmath>
#include <random>
#include <string>

#include "thermobar/equilibria.hpp"
#include "thermobar/errors.hpp"

namespace thermobar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> smooth3(const std::vector<double>& in) {
  const std::size_t n = in.size();
  if (n < 3) return in;
  std::vector<double> out(n);
  out.front() = 0.5 * (in[0] + in[1]);
  out.back() = 0.5 * (in[n - 2] + in[n - 1]);
  for (std::size_t j = 1; j + 1 < n; ++j) out[j] = (in[j - 1] + in[j] + in[j + 1]) / 3.0;
  return out;
}

std::vector<double> draw(std::mt19937_64& rng, std::size_t count, double amplitude) {
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  std::vector<double> v(count);
  for (double& x : v) x = dist(rng);
  return v;
}

// Splits a whole-bar nodal array into the three per-segment arrays.
std::array<std::vector<double>, 3> split_nodal(const std::vector<double>& global,
                                               const Discretization& d) {
  std::array<std::vector<double>, 3> seg;
  for (int s = 0; s < 3; ++s) {
    const auto first = global.begin() + d.first_node[s];
    seg[s].assign(first, first + d.cells(s) + 1);
  }
  return seg;
}

StateVector random_state(const presets::RandomSeeded& p, const Discretization& d) {
  if (!p.seed) throw Error(ErrorCode::SeedlessRandom, "random initial data needs a seed");
  std::mt19937_64 rng(*p.seed);
  const auto nodes = static_cast<std::size_t>(d.layout.global_nodes);
  const auto cells = static_cast<std::size_t>(d.middle().cells);

  auto displacement = smooth3(draw(rng, nodes, p.amplitude));
  auto velocity = smooth3(draw(rng, nodes, p.amplitude));
  auto theta = smooth3(draw(rng, cells, p.amplitude));
  auto flux = smooth3(draw(rng, cells + 1, p.amplitude));
  displacement.front() = displacement.back() = 0.0;
  velocity.front() = velocity.back() = 0.0;
  flux.front() = flux.back() = 0.0;

  FieldSamples f;
  f.displacement = split_nodal(displacement, d);
  f.velocity = split_nodal(velocity, d);
  f.theta = theta;
  if (d.config.cattaneo()) f.flux = flux;
  return pack(f, d);
}

StateVector custom_state(const presets::Custom& p, const Discretization& d) {
  FieldSamples f = sample(p.samplers, d);
  auto check_zero = [](double value, const std::string& what) {
    if (!(std::abs(value) <= kConstraintTolerance * std::max(1.0, std::abs(value)))) {
      throw Error(ErrorCode::InconsistentCustom, what + " must vanish, sampler gives " +
                                                     std::to_string(value));
    }
  };
  for (auto* field : {&f.displacement, &f.velocity}) {
    auto& seg = *field;
    check_zero(seg[0].front(), "outer field at x = 0");
    check_zero(seg[2].back(), "outer field at x = L3");
    seg[0].back() = seg[1].front();
    seg[2].front() = seg[1].back();
  }
  if (d.config.cattaneo()) {
    check_zero(f.flux.front(), "flux at L1");
    check_zero(f.flux.back(), "flux at L2");
  }
  return pack(f, d);
}

StateVector gaussian_state(const presets::GaussianDisplacement& p, const Discretization& d) {
  if (!(p.width > 0.0)) throw Error(ErrorCode::BadValue, "gaussian width must be positive");
  const double L3 = d.config.L3;
  const auto g = [p](double x) {
    const double s = (x - p.center) / p.width;
    return p.amplitude * std::exp(-s * s);
  };
  const double g0 = g(0.0), g3 = g(L3);
  const auto w = [g, g0, g3, L3](double x) { return g(x) - g0 - (g3 - g0) * x / L3; };
  FieldFunctions fns;
  fns.middle_displacement = w;
  fns.outer_displacement = w;
  FieldSamples f = sample(fns, d);
  // the linear shift leaves round-off at x = L3
  f.displacement[2].back() = 0.0;
  f.displacement[0].front() = 0.0;
  return pack(f, d);
}

}  // namespace

StateVector make_initial_state(const ModelConfig& cfg, const Discretization& disc,
                               const InitialDataSpec& spec) {
  validate(cfg);
  if (cfg.law != disc.config.law) {
    throw Error(ErrorCode::LayoutMismatch, "discretization was built for the other heat law");
  }
  StateVector u = std::visit(
      overloaded{
          [&](const presets::Zero&) -> StateVector { return StateVector::Zero(disc.layout.size); },
          [&](const presets::ConstantTheta& p) -> StateVector {
            StateVector v = StateVector::Zero(disc.layout.size);
            v.segment(disc.layout.theta_offset, disc.layout.theta_count).setConstant(p.value);
            return v;
          },
          [&](const presets::GaussianDisplacement& p) { return gaussian_state(p, disc); },
          [&](const presets::RandomSeeded& p) { return random_state(p, disc); },
          [&](const presets::KernelVector& p) { return sample_kernel(disc, p.scale); },
          [&](const presets::Custom& p) { return custom_state(p, disc); },
      },
      spec.preset);
  if (spec.well_prepared) u = project(u, disc).range_part;
  return u;
}

}  // namespace thermobar
