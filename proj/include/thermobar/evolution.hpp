#pragma once

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "thermobar/generator.hpp"

namespace thermobar {

/// LU factors of (I - dt/2 A) and the explicit half (I + dt/2 A), keyed by dt.
class StepCache {
 public:
  struct Entry {
    Eigen::PartialPivLU<Eigen::MatrixXd> implicit_half;
    Eigen::MatrixXd explicit_half;
  };

  /// Factors on first use; throws SingularStep when the factor is numerically singular.
  const Entry& get(const Eigen::MatrixXd& A, double dt);
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  const Eigen::MatrixXd* owner_ = nullptr;
  std::map<double, Entry> entries_;
};

/// One Crank-Nicolson step: (I - dt/2 A) U+ = (I + dt/2 A) U.
StateVector cn_step(const StateVector& u, double dt, const Eigen::MatrixXd& A, StepCache& cache);
StateVector cn_step(const StateVector& u, double dt, const GeneratorSystem& sys, StepCache& cache);

struct Trajectory {
  std::vector<double> times;
  std::vector<double> energy_total;      // E(U(t))
  std::vector<double> energy_deviation;  // E(U(t) - W0), W0 frozen at t = 0
  /// Row 0 holds the instantaneous rate at U0; row n > 0 the midpoint rate of step n - 1 -> n.
  std::vector<double> dissipation;
  /// Per step: |E(U+) - E(U) - dt * rate(U_mid)| / max(E(U), tiny).
  std::vector<double> ledger_residual;
  std::vector<double> snapshot_times;
  std::vector<StateVector> snapshots;
  double kernel_coeff = 0.0;
};

/// snapshot_stride = 0 stores no snapshots; otherwise every stride-th step plus t = 0.
Trajectory simulate(const StateVector& u0, const GeneratorSystem& sys, double dt, double t_max,
                    int snapshot_stride = 0);

struct DecayReport {
  double fitted_rate = 0.0;
  double intercept = 0.0;  // log of the prefactor
  double t_lo = 0.0;
  double t_hi = 0.0;
  double fit_residual = 0.0;  // RMS of log-energy residuals
  int samples = 0;
  bool envelope = false;  // fitted at local maxima (true) or at every window sample
  std::optional<double> reference_rate;
  std::optional<double> relative_gap;
};

/**
 * Least-squares line through log E over the trailing `window_fraction` of the
 * series, at local maxima when there are at least 20 of them. `period`, when
 * given, is the slowest oscillation period and the window must span three of them.
 */
DecayReport fit_decay(const std::vector<double>& times, const std::vector<double>& energy,
                      double window_fraction, std::optional<double> reference_rate = std::nullopt,
                      std::optional<double> period = std::nullopt);

DecayReport fit_decay(const Trajectory& traj, double window_fraction,
                      std::optional<double> reference_rate = std::nullopt,
                      std::optional<double> period = std::nullopt);

}  // namespace thermobar
