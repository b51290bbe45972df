#include "thermobar/discretization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermobar/errors.hpp"

namespace thermobar {

SbpOperator SbpOperator::build(const SegmentGrid& grid) {
  const int n = grid.cells;
  const double h = grid.h();
  SbpOperator op;
  op.node_to_cell = Eigen::MatrixXd::Zero(n, n + 1);
  op.cell_to_node = Eigen::MatrixXd::Zero(n + 1, n);
  op.boundary = Eigen::MatrixXd::Zero(n, n + 1);
  for (int c = 0; c < n; ++c) {
    op.node_to_cell(c, c) = -1.0 / h;
    op.node_to_cell(c, c + 1) = 1.0 / h;
  }
  for (int j = 1; j < n; ++j) {
    op.cell_to_node(j, j - 1) = -1.0 / h;
    op.cell_to_node(j, j) = 1.0 / h;
  }
  op.node_weights = Eigen::VectorXd::Constant(n + 1, h);
  op.node_weights(0) = 0.5 * h;
  op.node_weights(n) = 0.5 * h;
  op.cell_weights = Eigen::VectorXd::Constant(n, h);
  op.boundary(0, 0) = -1.0;
  op.boundary(n - 1, n) = 1.0;
  return op;
}

double SbpOperator::identity_residual() const {
  const Eigen::MatrixXd lhs = cell_weights.asDiagonal() * node_to_cell +
                              (node_weights.asDiagonal() * cell_to_node).transpose();
  return (lhs - boundary).cwiseAbs().maxCoeff();
}

int DofLayout::offset(Field f) const noexcept {
  switch (f) {
    case Field::Displacement: return displacement_offset;
    case Field::Velocity: return velocity_offset;
    case Field::Theta: return theta_offset;
    case Field::Flux: return flux_offset;
  }
  return 0;
}

int DofLayout::count(Field f) const noexcept {
  switch (f) {
    case Field::Displacement:
    case Field::Velocity: return displacement_count;
    case Field::Theta: return theta_count;
    case Field::Flux: return flux_count;
  }
  return 0;
}

double Discretization::node_x(int global_node) const {
  for (int s = 2; s >= 0; --s) {
    if (global_node >= first_node[s]) return grids[s].node(global_node - first_node[s]);
  }
  return grids[0].x0;
}

Eigen::MatrixXd Discretization::extraction(int segment) const {
  const int n = grids[segment].cells;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n + 1, layout.displacement_count);
  for (int j = 0; j <= n; ++j) {
    const int dof = layout.node_dof(first_node[segment] + j);
    if (dof >= 0) p(j, dof) = 1.0;
  }
  return p;
}

Discretization build_discretization(const ModelConfig& cfg, int n1, int n2, int n3) {
  validate(cfg);
  if (n1 < 2 || n2 < 2 || n3 < 2) {
    throw Error(ErrorCode::TooFewCells, "every segment needs at least 2 cells, got (" +
                                            std::to_string(n1) + ", " + std::to_string(n2) +
                                            ", " + std::to_string(n3) + ")");
  }
  Discretization d;
  d.config = cfg;
  d.grids = {SegmentGrid{0.0, cfg.L1, n1}, SegmentGrid{cfg.L1, cfg.L2, n2},
             SegmentGrid{cfg.L2, cfg.L3, n3}};
  for (int s = 0; s < 3; ++s) d.ops[s] = SbpOperator::build(d.grids[s]);
  d.first_node = {0, n1, n1 + n2};

  DofLayout& l = d.layout;
  l.global_nodes = n1 + n2 + n3 + 1;
  l.displacement_count = n1 + n2 + n3 - 1;
  l.theta_count = n2;
  l.flux_count = cfg.cattaneo() ? n2 - 1 : 0;
  l.displacement_offset = 0;
  l.velocity_offset = l.displacement_count;
  l.theta_offset = 2 * l.displacement_count;
  l.flux_offset = l.theta_offset + l.theta_count;
  l.size = l.flux_offset + l.flux_count;

  d.nodal_mass = Eigen::VectorXd::Zero(l.displacement_count);
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j <= d.grids[s].cells; ++j) {
      const int dof = l.node_dof(d.first_node[s] + j);
      if (dof >= 0) d.nodal_mass(dof) += d.ops[s].node_weights(j);
    }
  }
  return d;
}

namespace {

std::vector<double> sample_on(const std::function<double(double)>& f, int count,
                              const std::function<double(int)>& where) {
  std::vector<double> out(count, 0.0);
  if (!f) return out;
  for (int i = 0; i < count; ++i) out[i] = f(where(i));
  return out;
}

void require_size(const std::vector<double>& v, std::size_t expected, const char* what) {
  if (v.size() != expected) {
    throw Error(ErrorCode::ShapeMismatch, std::string(what) + " has " + std::to_string(v.size()) +
                                              " samples, expected " + std::to_string(expected));
  }
}

void require_close(double lhs, double rhs, const std::string& what) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  if (!(std::abs(lhs - rhs) <= kConstraintTolerance * scale)) {
    throw Error(ErrorCode::ConstraintViolation,
                what + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
}

// Writes a per-segment nodal field into the shared displacement/velocity block.
void pack_nodal(const std::array<std::vector<double>, 3>& seg, const Discretization& d,
                const char* name, Eigen::Ref<Eigen::VectorXd> out) {
  for (int s = 0; s < 3; ++s) {
    require_size(seg[s], static_cast<std::size_t>(d.cells(s) + 1), name);
  }
  const std::string n(name);
  require_close(seg[0].front(), 0.0, n + " at x = 0");
  require_close(seg[2].back(), 0.0, n + " at x = L3");
  require_close(seg[0].back(), seg[1].front(), n + " continuity at L1");
  require_close(seg[1].back(), seg[2].front(), n + " continuity at L2");
  // outer segments first so the middle value wins at the interfaces
  for (int s : {0, 2, 1}) {
    for (int j = 0; j <= d.cells(s); ++j) {
      const int dof = d.layout.node_dof(d.first_node[s] + j);
      if (dof >= 0) out(dof) = seg[s][j];
    }
  }
}

std::array<std::vector<double>, 3> unpack_nodal(const Eigen::Ref<const Eigen::VectorXd>& block,
                                                const Discretization& d) {
  std::array<std::vector<double>, 3> seg;
  for (int s = 0; s < 3; ++s) {
    seg[s].assign(d.cells(s) + 1, 0.0);
    for (int j = 0; j <= d.cells(s); ++j) {
      const int dof = d.layout.node_dof(d.first_node[s] + j);
      if (dof >= 0) seg[s][j] = block(dof);
    }
  }
  return seg;
}

}  // namespace

FieldSamples sample(const FieldFunctions& fns, const Discretization& d) {
  FieldSamples f;
  for (int s = 0; s < 3; ++s) {
    const SegmentGrid& g = d.grids[s];
    const auto at_node = [&g](int j) { return g.node(j); };
    f.displacement[s] = sample_on(s == 1 ? fns.middle_displacement : fns.outer_displacement,
                                  g.cells + 1, at_node);
    f.velocity[s] =
        sample_on(s == 1 ? fns.middle_velocity : fns.outer_velocity, g.cells + 1, at_node);
  }
  const SegmentGrid& mid = d.middle();
  f.theta = sample_on(fns.theta, mid.cells, [&mid](int c) { return mid.cell_center(c); });
  if (d.config.cattaneo()) {
    f.flux = sample_on(fns.flux, mid.cells + 1, [&mid](int j) { return mid.node(j); });
  }
  return f;
}

StateVector pack(const FieldSamples& fields, const Discretization& d) {
  const DofLayout& l = d.layout;
  StateVector out = StateVector::Zero(l.size);
  pack_nodal(fields.displacement, d, "displacement",
             out.segment(l.displacement_offset, l.displacement_count));
  pack_nodal(fields.velocity, d, "velocity", out.segment(l.velocity_offset, l.displacement_count));

  require_size(fields.theta, static_cast<std::size_t>(l.theta_count), "theta");
  for (int c = 0; c < l.theta_count; ++c) out(l.theta_offset + c) = fields.theta[c];

  if (d.config.cattaneo()) {
    require_size(fields.flux, static_cast<std::size_t>(d.middle().cells + 1), "flux");
    require_close(fields.flux.front(), 0.0, "flux at L1");
    require_close(fields.flux.back(), 0.0, "flux at L2");
    for (int j = 0; j < l.flux_count; ++j) out(l.flux_offset + j) = fields.flux[j + 1];
  } else {
    require_size(fields.flux, 0, "flux (Fourier law has no flux field)");
  }
  return out;
}

void require_layout(Eigen::Index size, const Discretization& d) {
  if (size != d.layout.size) {
    throw Error(ErrorCode::LayoutMismatch, "state has length " + std::to_string(size) +
                                               ", layout expects " +
                                               std::to_string(d.layout.size));
  }
}

FieldSamples unpack(const StateVector& state, const Discretization& d) {
  require_layout(state.size(), d);
  const DofLayout& l = d.layout;
  FieldSamples f;
  f.displacement = unpack_nodal(state.segment(l.displacement_offset, l.displacement_count), d);
  f.velocity = unpack_nodal(state.segment(l.velocity_offset, l.displacement_count), d);
  f.theta.assign(state.data() + l.theta_offset, state.data() + l.theta_offset + l.theta_count);
  if (d.config.cattaneo()) {
    f.flux.assign(d.middle().cells + 1, 0.0);
    for (int j = 0; j < l.flux_count; ++j) f.flux[j + 1] = state(l.flux_offset + j);
  }
  return f;
}

namespace {

template <typename Vec>
auto inner_product_impl(const Vec& u, const Vec& v, const Discretization& d) {
  using Scalar = typename Vec::Scalar;
  require_layout(u.size(), d);
  require_layout(v.size(), d);
  const DofLayout& l = d.layout;
  Scalar sum(0);

  const auto wu = u.segment(l.displacement_offset, l.displacement_count);
  const auto wv = v.segment(l.displacement_offset, l.displacement_count);
  for (int s = 0; s < 3; ++s) {
    const Eigen::MatrixXd grad = d.ops[s].node_to_cell * d.extraction(s);
    const auto su = (grad * wu).eval();
    const auto sv = (grad * wv).eval();
    sum += d.stiffness(s) * (su.conjugate().cwiseProduct(d.ops[s].cell_weights.template cast<Scalar>())
                                 .cwiseProduct(sv))
                                .sum();
  }

  const auto vu = u.segment(l.velocity_offset, l.displacement_count);
  const auto vv = v.segment(l.velocity_offset, l.displacement_count);
  sum += (vu.conjugate().cwiseProduct(d.nodal_mass.template cast<Scalar>()).cwiseProduct(vv)).sum();

  const double h = d.middle().h();
  sum += h * u.segment(l.theta_offset, l.theta_count).dot(v.segment(l.theta_offset, l.theta_count));
  if (l.flux_count > 0) {
    sum += d.config.tau * h *
           u.segment(l.flux_offset, l.flux_count).dot(v.segment(l.flux_offset, l.flux_count));
  }
  return sum;
}

}  // namespace

double h_inner_product(const StateVector& u, const StateVector& v, const Discretization& d) {
  return inner_product_impl(u, v, d);
}

std::complex<double> h_inner_product(const ComplexState& u, const ComplexState& v,
                                     const Discretization& d) {
  return inner_product_impl(u, v, d);
}

Eigen::MatrixXd gram_matrix(const Discretization& d) {
  const DofLayout& l = d.layout;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(l.size, l.size);
  auto disp = m.block(l.displacement_offset, l.displacement_offset, l.displacement_count,
                      l.displacement_count);
  for (int s = 0; s < 3; ++s) {
    const Eigen::MatrixXd grad = d.ops[s].node_to_cell * d.extraction(s);
    disp += d.stiffness(s) * grad.transpose() * d.ops[s].cell_weights.asDiagonal() * grad;
  }
  m.block(l.velocity_offset, l.velocity_offset, l.displacement_count, l.displacement_count) =
      d.nodal_mass.asDiagonal();
  const double h = d.middle().h();
  m.block(l.theta_offset, l.theta_offset, l.theta_count, l.theta_count).diagonal().setConstant(h);
  if (l.flux_count > 0) {
    m.block(l.flux_offset, l.flux_offset, l.flux_count, l.flux_count)
        .diagonal()
        .setConstant(d.config.tau * h);
  }
  return m;
}

}  // namespace thermobar
