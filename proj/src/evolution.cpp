#include "thermobar/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thermobar/equilibria.hpp"
#include "thermobar/errors.hpp"

namespace thermobar {

namespace {

constexpr int kMinFitSamples = 20;
constexpr double kUnderflow = 1e-300;

}  // namespace

const StepCache::Entry& StepCache::get(const Eigen::MatrixXd& A, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorCode::BadValue, "time step must be positive and finite");
  }
  if (owner_ != &A) {
    entries_.clear();
    owner_ = &A;
  }
  auto it = entries_.find(dt);
  if (it != entries_.end()) return it->second;

  const Eigen::Index n = A.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Entry e{Eigen::PartialPivLU<Eigen::MatrixXd>(id - 0.5 * dt * A), id + 0.5 * dt * A};
  const double rcond = e.implicit_half.rcond();
  if (!(rcond > 1e3 * std::numeric_limits<double>::epsilon())) {
    throw Error(ErrorCode::SingularStep, "Crank-Nicolson matrix is singular (rcond " +
                                             std::to_string(rcond) + ")");
  }
  return entries_.emplace(dt, std::move(e)).first->second;
}

StateVector cn_step(const StateVector& u, double dt, const Eigen::MatrixXd& A, StepCache& cache) {
  if (u.size() != A.rows()) throw Error(ErrorCode::LayoutMismatch, "state and generator sizes differ");
  const StepCache::Entry& e = cache.get(A, dt);
  return e.implicit_half.solve(e.explicit_half * u);
}

StateVector cn_step(const StateVector& u, double dt, const GeneratorSystem& sys, StepCache& cache) {
  require_layout(u.size(), sys.disc);
  return cn_step(u, dt, sys.A, cache);
}

Trajectory simulate(const StateVector& u0, const GeneratorSystem& sys, double dt, double t_max,
                    int snapshot_stride) {
  require_layout(u0.size(), sys.disc);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorCode::BadValue, "dt must be positive");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw Error(ErrorCode::BadValue, "t_max must be positive");
  if (snapshot_stride < 0) throw Error(ErrorCode::BadValue, "snapshot stride must be >= 0");

  const auto steps = static_cast<long>(std::ceil(t_max / dt - 1e-9));
  const EquilibriumDecomposition split = project(u0, sys.disc);

  Trajectory t;
  t.kernel_coeff = split.coeff;
  const auto reserve = static_cast<std::size_t>(steps + 1);
  t.times.reserve(reserve);
  t.energy_total.reserve(reserve);
  t.energy_deviation.reserve(reserve);
  t.dissipation.reserve(reserve);
  t.ledger_residual.reserve(reserve);

  StepCache cache;
  StateVector u = u0;
  double e_now = energy(u, sys);
  auto record = [&](long n, const StateVector& state, double e, double rate) {
    t.times.push_back(static_cast<double>(n) * dt);
    t.energy_total.push_back(e);
    t.energy_deviation.push_back(std::max(0.0, energy(state - split.kernel_part, sys)));
    t.dissipation.push_back(rate);
    if (snapshot_stride > 0 && n % snapshot_stride == 0) {
      t.snapshot_times.push_back(t.times.back());
      t.snapshots.push_back(state);
    }
  };
  record(0, u, e_now, dissipation_rate(u, sys));
  t.ledger_residual.push_back(0.0);

  for (long n = 1; n <= steps; ++n) {
    StateVector next = cn_step(u, dt, sys.A, cache);
    const double e_next = energy(next, sys);
    const double rate = dissipation_rate(0.5 * (u + next), sys);
    const double scale = std::max(e_now, std::numeric_limits<double>::min());
    t.ledger_residual.push_back(std::abs(e_next - e_now - dt * rate) / scale);
    record(n, next, e_next, rate);
    u = std::move(next);
    e_now = e_next;
  }
  return t;
}

DecayReport fit_decay(const std::vector<double>& times, const std::vector<double>& energy,
                      double window_fraction, std::optional<double> reference_rate,
                      std::optional<double> period) {
  if (times.size() != energy.size()) throw Error(ErrorCode::ShapeMismatch, "times and energies differ in length");
  if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
    throw Error(ErrorCode::BadValue, "window fraction must lie in (0, 1]");
  }
  if (times.size() < 2) throw Error(ErrorCode::WindowTooShort, "series has fewer than two samples");

  const double t_end = times.back();
  const double t_start = t_end - window_fraction * (t_end - times.front());
  std::size_t lo = 0;
  while (lo < times.size() && times[lo] < t_start) ++lo;
  std::size_t hi = times.size();
  // energies that have underflowed carry no rate information
  while (hi > lo && !(energy[hi - 1] > kUnderflow)) --hi;
  if (hi < times.size() && hi - lo < static_cast<std::size_t>(kMinFitSamples)) {
    throw Error(ErrorCode::EnergyUnderflow, "energy falls below 1e-300 inside the fit window");
  }
  if (hi <= lo || hi - lo < static_cast<std::size_t>(kMinFitSamples)) {
    throw Error(ErrorCode::WindowTooShort, "fit window holds fewer than 20 samples");
  }

  if (period) {
    if (!(*period > 0.0)) throw Error(ErrorCode::BadValue, "period must be positive");
    if (times[hi - 1] - times[lo] < 3.0 * *period) {
      throw Error(ErrorCode::WindowTooShort, "fit window spans fewer than three periods");
    }
  }

  std::vector<std::size_t> peaks;
  for (std::size_t i = std::max<std::size_t>(lo, 1); i + 1 < hi; ++i) {
    if (energy[i] > energy[i - 1] && energy[i] >= energy[i + 1]) peaks.push_back(i);
  }
  DecayReport r;
  r.envelope = peaks.size() >= static_cast<std::size_t>(kMinFitSamples);
  if (!r.envelope) {
    peaks.clear();
    for (std::size_t i = lo; i < hi; ++i) peaks.push_back(i);
  } else if (!period && times[peaks.back()] - times[peaks.front()] <= 0.0) {
    throw Error(ErrorCode::WindowTooShort, "envelope maxima do not span the window");
  }

  const auto n = static_cast<Eigen::Index>(peaks.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::size_t j = peaks[static_cast<std::size_t>(i)];
    double t_peak = times[j];
    double log_peak = std::log(energy[j]);
    if (r.envelope) {
      // vertex of the parabola through the three samples around the maximum, in log E
      const double t0 = times[j - 1], t1 = times[j], t2 = times[j + 1];
      const double y0 = std::log(energy[j - 1]), y1 = log_peak, y2 = std::log(energy[j + 1]);
      const double d01 = (y1 - y0) / (t1 - t0), d12 = (y2 - y1) / (t2 - t1);
      const double curv = (d12 - d01) / (t2 - t0);
      if (curv < 0.0) {
        const double at_t1 = d01 + curv * (t1 - t0);  // slope of the parabola at t1
        const double shift = -at_t1 / (2.0 * curv);
        t_peak = t1 + shift;
        log_peak = y1 + at_t1 * shift + curv * shift * shift;
      }
    }
    design(i, 0) = 1.0;
    design(i, 1) = t_peak;
    rhs(i) = log_peak;
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  r.intercept = coef(0);
  r.fitted_rate = -coef(1);
  r.fit_residual = std::sqrt((design * coef - rhs).squaredNorm() / static_cast<double>(n));
  r.t_lo = times[lo];
  r.t_hi = times[hi - 1];
  r.samples = static_cast<int>(n);
  if (reference_rate) {
    r.reference_rate = reference_rate;
    r.relative_gap = std::abs(r.fitted_rate - *reference_rate) / std::abs(*reference_rate);
  }
  return r;
}

DecayReport fit_decay(const Trajectory& traj, double window_fraction,
                      std::optional<double> reference_rate, std::optional<double> period) {
  return fit_decay(traj.times, traj.energy_deviation, window_fraction, reference_rate, period);
}

}  // namespace thermobar
