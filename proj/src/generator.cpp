#include "thermobar/generator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thermobar/errors.hpp"

namespace thermobar {

namespace {

// (n + 1) x (n - 1) embedding of interior middle nodes into all middle nodes.
Eigen::MatrixXd extend_by_zero(int cells) {
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(cells + 1, cells - 1);
  e.block(1, 0, cells - 1, cells - 1).setIdentity();
  return e;
}

bool same_config(const ModelConfig& x, const ModelConfig& y) {
  return x.L1 == y.L1 && x.L2 == y.L2 && x.L3 == y.L3 && x.a == y.a && x.b == y.b &&
         x.m == y.m && x.k == y.k && x.law == y.law && (x.law == HeatLaw::Fourier || x.tau == y.tau);
}

}  // namespace

GeneratorSystem assemble_generator(const ModelConfig& cfg, const Discretization& disc) {
  if (!same_config(cfg, disc.config)) {
    throw Error(ErrorCode::AssemblyError, "discretization was built for a different config");
  }
  return assemble_generator(disc);
}

GeneratorSystem assemble_generator(const Discretization& disc) {
  const ModelConfig& cfg = disc.config;
  const DofLayout& l = disc.layout;
  const int nd = l.displacement_count;
  const int n2 = disc.middle().cells;
  const double h2 = disc.middle().h();

  GeneratorSystem sys;
  sys.disc = disc;
  sys.M = gram_matrix(disc);
  sys.A = Eigen::MatrixXd::Zero(l.size, l.size);
  sys.Dq = Eigen::MatrixXd::Zero(l.size, l.size);
  auto& A = sys.A;

  // dw/dt = velocity
  A.block(l.displacement_offset, l.velocity_offset, nd, nd).setIdentity();

  // mu dv/dt = -sum_s P_s^T Dp_s^T Hc_s stress_s, stress = c Dp P w (- m theta on the middle).
  // At an interface node only the two adjacent boundary cells contribute, which is
  // the transmission condition sigma_in - sigma_out.
  const Eigen::VectorXd inv_mass = disc.nodal_mass.cwiseInverse();
  Eigen::MatrixXd stiffness = Eigen::MatrixXd::Zero(nd, nd);
  for (int s = 0; s < 3; ++s) {
    const Eigen::MatrixXd grad = disc.ops[s].node_to_cell * disc.extraction(s);
    stiffness += disc.stiffness(s) * grad.transpose() * disc.ops[s].cell_weights.asDiagonal() * grad;
  }
  A.block(l.velocity_offset, l.displacement_offset, nd, nd) = -(inv_mass.asDiagonal() * stiffness);

  const SbpOperator& mid = disc.ops[1];
  const Eigen::MatrixXd mid_grad = mid.node_to_cell * disc.extraction(1);  // n2 x nd
  A.block(l.velocity_offset, l.theta_offset, nd, n2) =
      cfg.m * inv_mass.asDiagonal() * mid_grad.transpose() * mid.cell_weights.asDiagonal();

  // d theta/dt = -m Dp v (+ heat conduction below)
  A.block(l.theta_offset, l.velocity_offset, n2, nd) = -cfg.m * mid_grad;

  const Eigen::MatrixXd embed = extend_by_zero(n2);
  const Eigen::MatrixXd interior_gradient = embed.transpose() * mid.cell_to_node;  // (n2-1) x n2

  if (cfg.cattaneo()) {
    const int nq = l.flux_count;
    A.block(l.theta_offset, l.flux_offset, n2, nq) = -cfg.k * mid.node_to_cell * embed;
    A.block(l.flux_offset, l.flux_offset, nq, nq).diagonal().setConstant(-1.0 / cfg.tau);
    A.block(l.flux_offset, l.theta_offset, nq, n2) = -(cfg.k / cfg.tau) * interior_gradient;
    sys.Dq.block(l.flux_offset, l.flux_offset, nq, nq).diagonal().setConstant(h2);
  } else {
    // zero boundary flux is the weak form of theta_x(L1) = theta_x(L2) = 0
    A.block(l.theta_offset, l.theta_offset, n2, n2) =
        cfg.k * cfg.k * mid.node_to_cell * embed * interior_gradient;
    sys.Dq.block(l.theta_offset, l.theta_offset, n2, n2) =
        cfg.k * cfg.k * h2 * interior_gradient.transpose() * interior_gradient;
  }

  if (A.rows() != sys.M.rows() || A.rows() != l.size) {
    throw Error(ErrorCode::AssemblyError, "generator and Gram matrix sizes disagree");
  }
  return sys;
}

double energy(const StateVector& u, const GeneratorSystem& sys) {
  require_layout(u.size(), sys.disc);
  return 0.5 * u.dot(sys.M * u);
}

double dissipation_rate(const StateVector& u, const GeneratorSystem& sys) {
  require_layout(u.size(), sys.disc);
  return -u.dot(sys.Dq * u);
}

Eigen::MatrixXd relaxation_matrix(const GeneratorSystem& sys) {
  const DofLayout& l = sys.disc.layout;
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(l.size, l.size);
  if (sys.config().cattaneo()) {
    e.block(l.flux_offset, l.flux_offset, l.flux_count, l.flux_count)
        .diagonal()
        .setConstant(1.0 / sys.config().tau);
  }
  return e;
}

StructureReport verify_structure(const Eigen::MatrixXd& A, const Eigen::MatrixXd& M,
                                 const Eigen::MatrixXd& Dq, const Eigen::MatrixXd* relaxation) {
  StructureReport report;
  const Eigen::MatrixXd MA = M * A;
  const double scale = std::max(MA.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const Eigen::MatrixXd sym = MA + MA.transpose() + 2.0 * Dq;
  report.checks.push_back(CheckResult::judge("dissipation_identity",
                                             sym.cwiseAbs().maxCoeff() / scale,
                                             kStructureTolerance));

  if (relaxation != nullptr) {
    const Eigen::LLT<Eigen::MatrixXd> chol(M);
    const Eigen::MatrixXd adjoint = chol.solve(A.transpose() * M);
    const Eigen::MatrixXd res = A + 2.0 * (*relaxation) + adjoint;
    const double a_scale = std::max(A.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    report.checks.push_back(
        CheckResult::judge("adjoint_identity", res.cwiseAbs().maxCoeff() / a_scale, kAdjointTolerance));
  } else {
    report.checks.push_back(CheckResult::skipped("adjoint_identity"));
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> m_eig(M, Eigen::EigenvaluesOnly);
  const double m_min = m_eig.eigenvalues().minCoeff();
  report.checks.push_back(CheckResult::judge("gram_positive_definite", -m_min, 0.0));
  if (m_min == 0.0) report.checks.back().status = CheckStatus::Fail;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> d_eig(Dq, Eigen::EigenvaluesOnly);
  const double d_scale = std::max(Dq.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  report.checks.push_back(CheckResult::judge("damping_semidefinite",
                                             std::max(0.0, -d_eig.eigenvalues().minCoeff()) / d_scale,
                                             kStructureTolerance));
  return report;
}

StructureReport verify_structure(const GeneratorSystem& sys) {
  if (sys.config().cattaneo()) {
    const Eigen::MatrixXd e = relaxation_matrix(sys);
    return verify_structure(sys.A, sys.M, sys.Dq, &e);
  }
  return verify_structure(sys.A, sys.M, sys.Dq, nullptr);
}

}  // namespace thermobar
