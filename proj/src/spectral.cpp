#include "thermobar/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "thermobar/equilibria.hpp"
#include "thermobar/errors.hpp"

namespace thermobar {

namespace {

double inf_norm(const Eigen::MatrixXd& A) {
  return A.rows() == 0 ? 0.0 : A.cwiseAbs().rowwise().sum().maxCoeff();
}

struct Eigensystem {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
};

Eigensystem eigensolve(const Eigen::MatrixXd& A, bool vectors) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, vectors);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "nonsymmetric eigensolver did not converge");
  }
  Eigensystem out{es.eigenvalues(), {}};
  if (vectors) out.vectors = es.eigenvectors();
  return out;
}

SpectrumReport analyse(const Eigensystem& eig, double scale, std::optional<double> tau) {
  SpectrumReport r;
  r.eigenvalues = eig.values;
  r.scale = scale;
  r.tol_zero = kZeroTolerance * scale;
  if (tau) r.strip_lower = -1.0 / *tau;

  Eigen::Index zero_index = -1;
  double worst_upper = -std::numeric_limits<double>::infinity();
  double worst_lower = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const std::complex<double> lambda = eig.values(i);
    if (std::abs(lambda) <= r.tol_zero) {
      ++r.zero_multiplicity;
      if (zero_index < 0) zero_index = i;
    }
    worst_upper = std::max(worst_upper, lambda.real());
    bool outside = lambda.real() > r.tol_zero;
    if (r.strip_lower) {
      worst_lower = std::max(worst_lower, *r.strip_lower - lambda.real());
      outside = outside || lambda.real() < *r.strip_lower - r.tol_zero;
    }
    if (outside) r.strip_violations.push_back(lambda);
  }

  r.abscissa_range = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (i != zero_index) r.abscissa_range = std::max(r.abscissa_range, eig.values(i).real());
  }

  r.checks.push_back(CheckResult::judge("simple_zero_eigenvalue",
                                        std::abs(r.zero_multiplicity - 1), 0.0));
  r.checks.push_back(CheckResult::judge("strip_upper", std::max(0.0, worst_upper), r.tol_zero));
  if (r.strip_lower) {
    r.checks.push_back(CheckResult::judge("strip_lower", std::max(0.0, worst_lower), r.tol_zero));
  } else {
    r.checks.push_back(CheckResult::skipped("strip_lower"));
  }
  return r;
}

}  // namespace

SpectrumReport compute_spectrum(const Eigen::MatrixXd& A, std::optional<double> tau) {
  return analyse(eigensolve(A, false), inf_norm(A), tau);
}

SpectrumReport compute_spectrum(const GeneratorSystem& sys) {
  const Eigensystem eig = eigensolve(sys.A, true);
  std::optional<double> tau;
  if (sys.config().cattaneo()) tau = sys.config().tau;
  SpectrumReport r = analyse(eig, inf_norm(sys.A), tau);

  if (r.zero_multiplicity == 1) {
    Eigen::Index idx = 0;
    eig.values.cwiseAbs().minCoeff(&idx);
    const Eigen::VectorXcd v = eig.vectors.col(idx);
    const Eigen::VectorXcd z = discrete_kernel(sys).cast<std::complex<double>>();
    const std::complex<double> zz = h_inner_product(z, z, sys.disc);
    const Eigen::VectorXcd perp = v - (h_inner_product(z, v, sys.disc) / zz) * z;
    const double vv = h_inner_product(v, v, sys.disc).real();
    const double pp = std::max(0.0, h_inner_product(perp, perp, sys.disc).real());
    r.zero_vector_angle = std::asin(std::min(1.0, std::sqrt(pp / vv)));
    r.checks.push_back(CheckResult::judge("zero_vector_matches_kernel", *r.zero_vector_angle, 1e-8));
  } else {
    r.checks.push_back(CheckResult::judge("zero_vector_matches_kernel",
                                          std::numeric_limits<double>::infinity(), 1e-8));
  }
  return r;
}

DeflatedOperator DeflatedOperator::from_reduced(const Eigen::MatrixXd& reduced) {
  DeflatedOperator d;
  d.reduced = reduced;
  return d;
}

DeflatedOperator deflate(const Eigen::MatrixXd& A, const Eigen::MatrixXd& M, const StateVector& Z) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || M.rows() != n || M.cols() != n || Z.size() != n) {
    throw Error(ErrorCode::LayoutMismatch, "deflation inputs have inconsistent sizes");
  }
  DeflatedOperator d;
  const Eigen::LLT<Eigen::MatrixXd> chol(M);
  if (chol.info() != Eigen::Success) {
    throw Error(ErrorCode::EigenFailure, "Gram matrix is not positive definite");
  }
  d.L = chol.matrixL();
  const auto lower = d.L.triangularView<Eigen::Lower>();
  const Eigen::MatrixXd a_lt = lower.solve(A.transpose()).transpose();  // A L^-T
  d.B = d.L.transpose() * a_lt;

  d.z = d.L.transpose() * Z;
  const double z_norm = d.z.norm();
  if (!(z_norm > 0.0)) throw Error(ErrorCode::KernelMismatch, "kernel vector is zero");
  d.z /= z_norm;

  const double b_scale = std::max(inf_norm(d.B), std::numeric_limits<double>::min());
  d.kernel_residual = std::max((d.B * d.z).norm(), (d.B.transpose() * d.z).norm()) / b_scale;
  if (!(d.kernel_residual <= kKernelTolerance)) {
    throw Error(ErrorCode::KernelMismatch,
                "L^T Z is not a two-sided null vector (residual " + std::to_string(d.kernel_residual) + ")");
  }

  // Householder reflector sending z to a multiple of e1; its last n-1 columns span z's complement
  Eigen::VectorXd w = d.z;
  w(0) += (d.z(0) >= 0.0 ? 1.0 : -1.0);
  w.normalize();
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n) - 2.0 * w * w.transpose();
  d.basis = H.rightCols(n - 1);
  d.reduced = d.basis.transpose() * d.B * d.basis;
  return d;
}

DeflatedOperator deflate(const GeneratorSystem& sys) {
  return deflate(sys.A, sys.M, discrete_kernel(sys));
}

double resolvent_norm(const DeflatedOperator& defl, double l) {
  const Eigen::Index n = defl.dimension();
  Eigen::MatrixXcd shifted = -defl.reduced.cast<std::complex<double>>();
  shifted.diagonal().array() += std::complex<double>(0.0, l);
  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(shifted);
  const double sigma_min = n == 0 ? 0.0 : svd.singularValues()(n - 1);
  if (!(sigma_min > std::numeric_limits<double>::min())) return std::numeric_limits<double>::infinity();
  return 1.0 / sigma_min;
}

ResolventSweep resolvent_sweep(const DeflatedOperator& defl, double l_min, double l_max, int count,
                               Spacing spacing, int threads) {
  if (count < 2) throw Error(ErrorCode::BadRange, "a sweep needs at least two frequencies");
  if (!(l_min < l_max) || !std::isfinite(l_min) || !std::isfinite(l_max)) {
    throw Error(ErrorCode::BadRange, "sweep needs l_min < l_max");
  }
  if (spacing == Spacing::Log && !(l_min > 0.0)) {
    throw Error(ErrorCode::BadRange, "log spacing needs l_min > 0");
  }

  ResolventSweep s;
  s.l_values.resize(static_cast<std::size_t>(count));
  s.norms.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    s.l_values[static_cast<std::size_t>(i)] =
        spacing == Spacing::Linear ? l_min + f * (l_max - l_min)
                                   : std::exp(std::log(l_min) + f * (std::log(l_max) - std::log(l_min)));
  }
  s.l_values.back() = l_max;

  const int workers = std::clamp(threads, 1, count);
  auto run = [&](int first) {
    for (int i = first; i < count; i += workers) {
      s.norms[static_cast<std::size_t>(i)] = resolvent_norm(defl, s.l_values[static_cast<std::size_t>(i)]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  const auto top = std::max_element(s.norms.begin(), s.norms.end());
  s.sup_norm = *top;
  s.l_at_sup = s.l_values[static_cast<std::size_t>(top - s.norms.begin())];
  double top_max = 0.0;
  double top_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < s.norms.size(); ++i) {
    if (s.l_values[i] >= l_max / 10.0) {
      top_max = std::max(top_max, s.norms[i]);
      top_min = std::min(top_min, s.norms[i]);
    }
  }
  s.plateau_ratio = top_max / s.sup_norm;
  s.top_decade_spread = top_max / top_min;
  return s;
}

Eigen::VectorXcd deflated_eigenvalues(const DeflatedOperator& defl) {
  return eigensolve(defl.reduced, false).values;
}

double spectral_abscissa(const DeflatedOperator& defl) {
  if (defl.dimension() == 0) throw Error(ErrorCode::NonNegativeAbscissa, "deflated operator is empty");
  const double abscissa = deflated_eigenvalues(defl).real().maxCoeff();
  if (!(abscissa < 0.0)) {
    throw Error(ErrorCode::NonNegativeAbscissa,
                "deflated spectral abscissa is " + std::to_string(abscissa));
  }
  return abscissa;
}

}  // namespace thermobar
