#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "thermobar/generator.hpp"
#include "thermobar/report.hpp"

namespace thermobar {

constexpr double kZeroTolerance = 1e-10;    // times the infinity norm of A
constexpr double kKernelTolerance = 1e-10;  // deflation null-vector check, relative

struct SpectrumReport {
  Eigen::VectorXcd eigenvalues;
  double scale = 0.0;     // infinity norm of A
  double tol_zero = 0.0;  // kZeroTolerance * scale
  int zero_multiplicity = 0;
  std::optional<double> strip_lower;  // -1/tau under Cattaneo
  std::vector<std::complex<double>> strip_violations;
  /// max Re over eigenvalues other than one zero eigenvalue; -inf if there are none
  double abscissa_range = 0.0;
  /// M-angle between the zero eigenvector and Z; present when exactly one zero eigenvalue exists
  std::optional<double> zero_vector_angle;
  std::vector<CheckResult> checks;

  bool passed() const noexcept { return all_passed(checks); }
};

/// Full dense eigensolve; throws EigenFailure if the QR iteration does not converge.
SpectrumReport compute_spectrum(const GeneratorSystem& sys);

/// Same analysis for a bare matrix; `tau` enables the lower strip bound.
SpectrumReport compute_spectrum(const Eigen::MatrixXd& A, std::optional<double> tau = std::nullopt);

/**
 * Generator restricted to the M-orthogonal complement of its kernel, in
 * coordinates where the M-norm is the Euclidean norm.
 */
struct DeflatedOperator {
  Eigen::MatrixXd L;      // M = L L^T
  Eigen::MatrixXd B;      // L^T A L^-T
  Eigen::VectorXd z;      // L^T Z, unit length
  Eigen::MatrixXd basis;  // N x (N-1), orthonormal, orthogonal to z
  Eigen::MatrixXd reduced;
  double kernel_residual = 0.0;  // max(|B z|, |B^T z|) / |B|

  /// Wraps an already reduced matrix (synthetic tests).
  static DeflatedOperator from_reduced(const Eigen::MatrixXd& reduced);
  Eigen::Index dimension() const noexcept { return reduced.rows(); }
};

/// Throws KernelMismatch if L^T Z is not a two-sided null vector of B.
DeflatedOperator deflate(const GeneratorSystem& sys);
DeflatedOperator deflate(const Eigen::MatrixXd& A, const Eigen::MatrixXd& M, const StateVector& Z);

/// 1 / sigma_min(i l I - B_r); +inf when sigma_min underflows.
double resolvent_norm(const DeflatedOperator& defl, double l);

enum class Spacing { Linear, Log };

struct ResolventSweep {
  std::vector<double> l_values;
  std::vector<double> norms;
  double sup_norm = 0.0;
  double l_at_sup = 0.0;
  /// sup over the top decade [l_max / 10, l_max] divided by the overall sup
  double plateau_ratio = 0.0;
  /// max / min of the norms over the top decade
  double top_decade_spread = 0.0;
};

/// Throws BadRange for count < 2, l_min >= l_max, or l_min <= 0 on a log grid.
ResolventSweep resolvent_sweep(const DeflatedOperator& defl, double l_min, double l_max, int count,
                               Spacing spacing = Spacing::Log, int threads = 1);

Eigen::VectorXcd deflated_eigenvalues(const DeflatedOperator& defl);

/// max Re of the deflated spectrum; throws NonNegativeAbscissa unless strictly negative.
double spectral_abscissa(const DeflatedOperator& defl);

}  // namespace thermobar
