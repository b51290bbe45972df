#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "thermobar/model.hpp"

namespace thermobar {

using StateVector = Eigen::VectorXd;
using ComplexState = Eigen::VectorXcd;

/// Uniform grid on [x0, x1] with `cells` cells and cells + 1 nodes.
struct SegmentGrid {
  double x0 = 0.0;
  double x1 = 1.0;
  int cells = 2;

  double h() const noexcept { return (x1 - x0) / cells; }
  double node(int j) const noexcept { return j == cells ? x1 : x0 + j * h(); }
  double cell_center(int c) const noexcept { return x0 + (c + 0.5) * h(); }
  double length() const noexcept { return x1 - x0; }
};

/**
 * Second-order staggered summation-by-parts pair on one segment.
 *
 * `node_to_cell` maps nodal values to cell differences (u[c+1] - u[c]) / h,
 * `cell_to_node` maps cell values to differences at interior nodes and is zero on
 * the two boundary rows. With midpoint cell weights Hc and trapezoid node
 * weights Hn they satisfy
 *
 *     Hc * node_to_cell + (Hn * cell_to_node)^T = B,
 *
 * where B has -1 at (0, 0) and +1 at (cells - 1, cells).
 */
struct SbpOperator {
  Eigen::MatrixXd node_to_cell;  // cells x (cells + 1)
  Eigen::MatrixXd cell_to_node;  // (cells + 1) x cells
  Eigen::VectorXd node_weights;  // h * (1/2, 1, ..., 1, 1/2)
  Eigen::VectorXd cell_weights;  // h * (1, ..., 1)
  Eigen::MatrixXd boundary;      // cells x (cells + 1)

  static SbpOperator build(const SegmentGrid& grid);

  /// max |Hc Dp + (Hn Dm)^T - B|
  double identity_residual() const;
};

enum class Field { Displacement, Velocity, Theta, Flux };

/**
 * Index map of the flat state vector.
 *
 * Displacement and velocity live on the nodes of the whole bar except x = 0 and
 * x = L3; interface nodes L1, L2 carry one shared value. Temperature lives on the
 * middle cells, heat flux (Cattaneo only) on the interior middle nodes.
 */
struct DofLayout {
  int global_nodes = 0;  // n1 + n2 + n3 + 1
  int displacement_count = 0;
  int theta_count = 0;
  int flux_count = 0;
  int displacement_offset = 0;
  int velocity_offset = 0;
  int theta_offset = 0;
  int flux_offset = 0;
  int size = 0;

  int offset(Field f) const noexcept;
  int count(Field f) const noexcept;

  /// Displacement/velocity DOF for a global node, or -1 for x = 0 and x = L3.
  int node_dof(int global_node) const noexcept {
    return (global_node <= 0 || global_node >= global_nodes - 1) ? -1 : global_node - 1;
  }
};

struct Discretization {
  ModelConfig config;
  std::array<SegmentGrid, 3> grids;
  std::array<SbpOperator, 3> ops;
  std::array<int, 3> first_node{};  // global index of each segment's left node
  DofLayout layout;
  Eigen::VectorXd nodal_mass;       // summed trapezoid weights per displacement DOF

  const SegmentGrid& middle() const noexcept { return grids[1]; }
  int cells(int segment) const noexcept { return grids[segment].cells; }
  double stiffness(int segment) const noexcept { return segment == 1 ? config.a : config.b; }
  double node_x(int global_node) const;

  /// (cells + 1) x displacement_count selection of segment nodal values; constrained nodes map to 0.
  Eigen::MatrixXd extraction(int segment) const;
};

Discretization build_discretization(const ModelConfig& cfg, int n1, int n2, int n3);

/// Per-field samples. Displacement and velocity are given per segment on its own
/// nodes (the interface value appears in two segments); theta on middle cells;
/// flux on all middle nodes (Cattaneo) or empty (Fourier).
struct FieldSamples {
  std::array<std::vector<double>, 3> displacement;
  std::array<std::vector<double>, 3> velocity;
  std::vector<double> theta;
  std::vector<double> flux;
};

/// Pointwise samplers. `middle_*` act on [L1, L2], `outer_*` on [0, L1] and [L2, L3].
struct FieldFunctions {
  std::function<double(double)> middle_displacement;
  std::function<double(double)> outer_displacement;
  std::function<double(double)> middle_velocity;
  std::function<double(double)> outer_velocity;
  std::function<double(double)> theta;
  std::function<double(double)> flux;
};

/// Samples each field on its grid locations; missing samplers produce zeros.
FieldSamples sample(const FieldFunctions& fns, const Discretization& disc);

constexpr double kConstraintTolerance = 1e-12;

StateVector pack(const FieldSamples& fields, const Discretization& disc);
FieldSamples unpack(const StateVector& state, const Discretization& disc);

/// Discrete energy inner product U^* M V, evaluated field by field.
double h_inner_product(const StateVector& u, const StateVector& v, const Discretization& disc);
std::complex<double> h_inner_product(const ComplexState& u, const ComplexState& v,
                                     const Discretization& disc);

/// The symmetric positive definite matrix M with h_inner_product(U, V) = U^T M V.
Eigen::MatrixXd gram_matrix(const Discretization& disc);

void require_layout(Eigen::Index size, const Discretization& disc);

}  // namespace thermobar
