#include "thermobar/equilibria.hpp"

#include <cmath>
#include <limits>

#include "thermobar/errors.hpp"

namespace thermobar {

StateVector sample_kernel(const Discretization& disc, double scale) {
  const KernelFunctions z = kernel_functions(disc.config);
  FieldFunctions fns;
  fns.middle_displacement = [z, scale](double x) { return scale * z.zeta1(x); };
  fns.outer_displacement = [z, scale](double x) { return scale * z.zeta2(x); };
  fns.theta = [z, scale](double) { return scale * z.zeta3; };
  return pack(sample(fns, disc), disc);
}

StateVector discrete_kernel(const GeneratorSystem& sys) { return sample_kernel(sys.disc); }

double kernel_residual(const GeneratorSystem& sys, const StateVector& z) {
  require_layout(z.size(), sys.disc);
  const double tiny = std::numeric_limits<double>::min();
  const double z_norm = std::max(z.cwiseAbs().maxCoeff(), tiny);
  const Eigen::MatrixXd AtM = sys.A.transpose() * sys.M;
  const double right = (sys.A * z).cwiseAbs().maxCoeff() /
                       (std::max(sys.A.cwiseAbs().maxCoeff(), tiny) * z_norm);
  const double left =
      (AtM * z).cwiseAbs().maxCoeff() / (std::max(AtM.cwiseAbs().maxCoeff(), tiny) * z_norm);
  return std::max(right, left);
}

EquilibriumDecomposition project(const StateVector& u0, const Discretization& disc) {
  require_layout(u0.size(), disc);
  const StateVector z = sample_kernel(disc);
  EquilibriumDecomposition out;
  out.coeff = h_inner_product(u0, z, disc) / h_inner_product(z, z, disc);
  out.kernel_part = out.coeff * z;
  out.range_part = u0 - out.kernel_part;
  return out;
}

EquilibriumDecomposition project(const StateVector& u0, const GeneratorSystem& sys) {
  return project(u0, sys.disc);
}

double range_condition(const StateVector& u0, const Discretization& disc) {
  require_layout(u0.size(), disc);
  const DofLayout& l = disc.layout;
  const double theta_integral = disc.middle().h() * u0.segment(l.theta_offset, l.theta_count).sum();
  const int left = l.node_dof(disc.first_node[1]);
  const int right = l.node_dof(disc.first_node[2]);
  const double jump = u0(l.displacement_offset + right) - u0(l.displacement_offset + left);
  return theta_integral + disc.config.m * jump;
}

double range_condition(const StateVector& u0, const GeneratorSystem& sys) {
  return range_condition(u0, sys.disc);
}

EquivalenceReport check_equivalence(const StateVector& u0, const GeneratorSystem& sys) {
  require_layout(u0.size(), sys.disc);
  const StateVector z = discrete_kernel(sys);
  const double zeta3 = kernel_functions(sys.config()).zeta3;
  EquivalenceReport r;
  r.inner_with_kernel = h_inner_product(u0, z, sys.disc);
  r.condition = range_condition(u0, sys.disc);
  r.zeta3_times_condition = zeta3 * r.condition;
  r.residual = std::abs(r.inner_with_kernel - r.zeta3_times_condition);
  const double norms = std::sqrt(std::max(0.0, h_inner_product(u0, u0, sys.disc)) *
                                 h_inner_product(z, z, sys.disc));
  r.tolerance = kEquivalenceTolerance * norms;
  r.passed = r.residual <= r.tolerance;
  return r;
}

}  // namespace thermobar
