#include <doctest.h>

#include <cmath>

#include "thermobar/discretization.hpp"
#include "thermobar/equilibria.hpp"
#include "thermobar/errors.hpp"

using namespace thermobar;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("layout sizes") {
  const Discretization c = build_discretization(reference_config(HeatLaw::Cattaneo), 4, 4, 4);
  const Discretization f = build_discretization(reference_config(HeatLaw::Fourier), 4, 4, 4);
  // displacement and velocity on 11 nodes each, 4 temperature cells, 3 interior flux nodes
  CHECK(c.layout.size == 2 * 11 + 4 + 3);
  CHECK(f.layout.size == 2 * 11 + 4);
  CHECK(c.layout.global_nodes == 13);
  CHECK(c.layout.node_dof(0) == -1);
  CHECK(c.layout.node_dof(12) == -1);
  CHECK(c.layout.node_dof(4) == 3);

  const Discretization uneven = build_discretization(reference_config(), 3, 5, 7);
  CHECK(uneven.layout.size == 2 * (3 + 5 + 7 - 1) + 5 + 4);
  CHECK(throws_code(ErrorCode::TooFewCells, [] { build_discretization(reference_config(), 1, 4, 4); }));
}

TEST_CASE("summation-by-parts identity and exactness") {
  for (int n : {2, 3, 8, 33}) {
    const SegmentGrid g{0.7, 2.1, n};
    const SbpOperator op = SbpOperator::build(g);
    CHECK(op.identity_residual() <= 1e-14);
    CHECK(op.node_weights.sum() == doctest::Approx(g.length()).epsilon(1e-14));
    CHECK(op.cell_weights.sum() == doctest::Approx(g.length()).epsilon(1e-14));

    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n + 1);
    Eigen::VectorXd x(n + 1);
    for (int j = 0; j <= n; ++j) x(j) = g.node(j);
    CHECK((op.node_to_cell * ones).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(((op.node_to_cell * x).array() - 1.0).abs().maxCoeff() <= 1e-12);

    // cell -> node difference: exact on affine cell data at interior nodes
    Eigen::VectorXd xc(n);
    for (int c = 0; c < n; ++c) xc(c) = g.cell_center(c);
    const Eigen::VectorXd d = op.cell_to_node * xc;
    for (int j = 1; j < n; ++j) CHECK(d(j) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d(0) == 0.0);
    CHECK(d(n) == 0.0);
  }
}

TEST_CASE("pack and unpack round trip") {
  const Discretization disc = build_discretization(reference_config(), 4, 5, 6);

  SUBCASE("zero fields") {
    const FieldSamples f = sample(FieldFunctions{}, disc);
    const StateVector u = pack(f, disc);
    CHECK(u.size() == disc.layout.size);
    CHECK(u.isZero(0.0));
    const FieldSamples back = unpack(u, disc);
    CHECK(back.theta == f.theta);
    CHECK(back.flux == f.flux);
  }
  SUBCASE("kernel sampling") {
    const KernelFunctions z = kernel_functions(disc.config);
    const FieldSamples back = unpack(sample_kernel(disc), disc);
    for (int s = 0; s < 3; ++s) {
      for (int j = 0; j <= disc.cells(s); ++j) {
        const double x = disc.grids[s].node(j);
        const double expected = s == 1 ? z.zeta1(x) : z.zeta2(x);
        CHECK(back.displacement[s][static_cast<std::size_t>(j)] == doctest::Approx(expected).epsilon(1e-14));
      }
    }
    for (double t : back.theta) CHECK(t == doctest::Approx(z.zeta3));
    CHECK(pack(back, disc) == sample_kernel(disc));
  }
  SUBCASE("random states survive unpack then pack") {
    const StateVector u = StateVector::Random(disc.layout.size);
    CHECK((pack(unpack(u, disc), disc) - u).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("pack rejects inconsistent fields") {
  const Discretization disc = build_discretization(reference_config(), 4, 4, 4);
  FieldSamples f = sample(FieldFunctions{}, disc);
  SUBCASE("velocity at x = 0") {
    f.velocity[0][0] = 1.0;
    CHECK(throws_code(ErrorCode::ConstraintViolation, [&] { pack(f, disc); }));
  }
  SUBCASE("flux at L2") {
    f.flux.back() = 1.0;
    CHECK(throws_code(ErrorCode::ConstraintViolation, [&] { pack(f, disc); }));
  }
  SUBCASE("interface values disagree") {
    f.displacement[0].back() = 0.5;
    CHECK(throws_code(ErrorCode::ConstraintViolation, [&] { pack(f, disc); }));
  }
  SUBCASE("wrong array length") {
    f.theta.push_back(0.0);
    CHECK(throws_code(ErrorCode::ShapeMismatch, [&] { pack(f, disc); }));
  }
  SUBCASE("wrong state length") {
    CHECK(throws_code(ErrorCode::LayoutMismatch, [&] { unpack(StateVector::Zero(3), disc); }));
  }
}

TEST_CASE("energy inner product") {
  const Discretization disc = build_discretization(reference_config(), 8, 8, 8);
  const StateVector z = sample_kernel(disc);
  CHECK(h_inner_product(z, z, disc) == doctest::Approx(5.0 / 3.0).epsilon(1e-14));

  StateVector theta = StateVector::Zero(disc.layout.size);
  theta.segment(disc.layout.theta_offset, disc.layout.theta_count).setOnes();
  CHECK(h_inner_product(theta, theta, disc) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h_inner_product(StateVector::Zero(disc.layout.size), z, disc) == 0.0);

  const Eigen::MatrixXd M = gram_matrix(disc);
  CHECK((M - M.transpose()).cwiseAbs().maxCoeff() == 0.0);
  const StateVector u = StateVector::Random(disc.layout.size);
  const StateVector v = StateVector::Random(disc.layout.size);
  CHECK(h_inner_product(u, v, disc) == doctest::Approx(u.dot(M * v)).epsilon(1e-13));
  CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M).eigenvalues().minCoeff() > 0.0);

  const ComplexState cu = u.cast<std::complex<double>>() * std::complex<double>(0.0, 1.0);
  const ComplexState cv = v.cast<std::complex<double>>();
  // conjugate-linear in the first slot
  const std::complex<double> ip = h_inner_product(cu, cv, disc);
  CHECK(ip.imag() == doctest::Approx(-h_inner_product(u, v, disc)).epsilon(1e-13));
  CHECK(std::abs(ip - std::conj(h_inner_product(cv, cu, disc))) < 1e-13);
}
