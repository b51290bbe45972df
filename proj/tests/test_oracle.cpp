#include <doctest.h>

#include "oracle.hpp"

TEST_CASE("characteristic polynomial of a triangular matrix") {
  Eigen::MatrixXd A(3, 3);
  A << 1, 5, -2, 0, 2, 7, 0, 0, 3;
  const auto c = oracle::characteristic_polynomial(A);
  // (x - 1)(x - 2)(x - 3) = x^3 - 6x^2 + 11x - 6
  REQUIRE(c.size() == 4);
  CHECK(static_cast<double>(c[0]) == doctest::Approx(-6.0));
  CHECK(static_cast<double>(c[1]) == doctest::Approx(11.0));
  CHECK(static_cast<double>(c[2]) == doctest::Approx(-6.0));
  CHECK(static_cast<double>(c[3]) == 1.0);
}

TEST_CASE("oracle recovers a rotation's imaginary pair") {
  Eigen::MatrixXd A(2, 2);
  A << -0.5, 2.0, -2.0, -0.5;
  const auto roots = oracle::eigenvalues(A);
  CHECK(oracle::match_distance(roots, {{-0.5, 2.0}, {-0.5, -2.0}}) < 1e-13);
}

TEST_CASE("oracle on a dense nonsymmetric matrix with a known similarity") {
  // S diag(d) S^-1 with a well-conditioned S
  Eigen::MatrixXd S(4, 4);
  S << 1, 0.2, 0, 0.1, 0.3, 1, 0.1, 0, 0, 0.2, 1, 0.3, 0.1, 0, 0.2, 1;
  const Eigen::Vector4d d(-1.0, -2.5, 0.0, -4.0);
  const Eigen::MatrixXd A = S * d.asDiagonal() * S.inverse();
  const auto roots = oracle::eigenvalues(A);
  CHECK(oracle::match_distance(roots, {-1.0, -2.5, 0.0, -4.0}) < 1e-10);
}

TEST_CASE("matching rejects different counts") {
  CHECK(oracle::match_distance({1.0}, {1.0, 2.0}) == std::numeric_limits<double>::infinity());
}
