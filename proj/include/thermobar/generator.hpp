#pragma once

#include <vector>

#include <Eigen/Dense>

#include "thermobar/discretization.hpp"
#include "thermobar/report.hpp"

namespace thermobar {

/**
 * Discrete semigroup generator with its energy geometry.
 *
 * dU/dt = A U; E(U) = U^T M U / 2; the only damping enters through Dq, and the
 * assembly guarantees M A + A^T M = -2 Dq up to round-off for both heat laws.
 */
struct GeneratorSystem {
  Discretization disc;
  Eigen::MatrixXd A;
  Eigen::MatrixXd M;
  Eigen::MatrixXd Dq;

  const ModelConfig& config() const noexcept { return disc.config; }
  HeatLaw law() const noexcept { return disc.config.law; }
  int size() const noexcept { return disc.layout.size; }
};

GeneratorSystem assemble_generator(const Discretization& disc);

/// Same as above; throws AssemblyError if `disc` was built for a different config.
GeneratorSystem assemble_generator(const ModelConfig& cfg, const Discretization& disc);

double energy(const StateVector& u, const GeneratorSystem& sys);

/// -U^T Dq U, which equals U^T M A U.
double dissipation_rate(const StateVector& u, const GeneratorSystem& sys);

/// Matrix of the bounded part E_tau: 1/tau on the flux block, zero elsewhere (Cattaneo only).
Eigen::MatrixXd relaxation_matrix(const GeneratorSystem& sys);

struct StructureReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept { return all_passed(checks); }
};

constexpr double kStructureTolerance = 1e-12;
constexpr double kAdjointTolerance = 1e-10;

/**
 * Checks, in order:
 *  1. dissipation identity  max|M A + A^T M + 2 Dq| / max|M A|
 *  2. adjoint identity      max|A + E + M^-1 A^T M + E| / max|A|   (Cattaneo; skipped for Fourier)
 *  3. positive energy       min eig(M) > 0  (residual reported as -min eig)
 *  4. semidefinite damping  min eig(Dq) >= -1e-12 * max|Dq|
 */
StructureReport verify_structure(const GeneratorSystem& sys);

/// Same checks on raw matrices; used for sensitivity tests on perturbed generators.
StructureReport verify_structure(const Eigen::MatrixXd& A, const Eigen::MatrixXd& M,
                                 const Eigen::MatrixXd& Dq, const Eigen::MatrixXd* relaxation);

}  // namespace thermobar
