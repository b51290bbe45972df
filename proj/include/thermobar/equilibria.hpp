#pragma once

#include "thermobar/discretization.hpp"
#include "thermobar/generator.hpp"

namespace thermobar {

/// Grid sampling of (zeta1, zeta2, zeta3, 0, 0, 0), scaled.
StateVector sample_kernel(const Discretization& disc, double scale = 1.0);

/// The discrete stationary state Z spanning ker(A).
StateVector discrete_kernel(const GeneratorSystem& sys);

/// max(|A Z| / (|A| |Z|), |A^T M Z| / (|A^T M| |Z|)) in the max norm.
double kernel_residual(const GeneratorSystem& sys, const StateVector& z);

/// U0 = W0 + V0 with W0 = coeff * Z in ker(A) and V0 M-orthogonal to Z (hence in range(A)).
struct EquilibriumDecomposition {
  StateVector kernel_part;
  StateVector range_part;
  double coeff = 0.0;
};

EquilibriumDecomposition project(const StateVector& u0, const GeneratorSystem& sys);

/// Same projection without a generator, using only the energy inner product.
EquilibriumDecomposition project(const StateVector& u0, const Discretization& disc);

/// Quadrature of theta over [L1, L2] plus m (u(L2) - u(L1)); vanishes exactly on range(A).
double range_condition(const StateVector& u0, const Discretization& disc);
double range_condition(const StateVector& u0, const GeneratorSystem& sys);

struct EquivalenceReport {
  double inner_with_kernel = 0.0;      // <U0, Z>_M
  double condition = 0.0;              // range_condition(U0)
  double zeta3_times_condition = 0.0;
  double residual = 0.0;               // |<U0,Z>_M - zeta3 * condition|
  double tolerance = 0.0;              // 1e-12 * |U0|_M |Z|_M
  bool passed = false;
};

constexpr double kEquivalenceTolerance = 1e-12;

/// <U0, Z>_M = zeta3 * range_condition(U0); since zeta3 < 0 this makes
/// "condition = 0" and "U0 in range(A)" literally the same statement.
EquivalenceReport check_equivalence(const StateVector& u0, const GeneratorSystem& sys);

}  // namespace thermobar
