#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "edgesync/linalg.hpp"

using namespace edgesync;

namespace {
const TolerancePolicy kTol;
}

TEST_CASE("numerical rank on exact and nearly-degenerate matrices") {
  CHECK(numerical_rank(Eigen::MatrixXd::Identity(4, 4), kTol) == 4);
  CHECK(numerical_rank(Eigen::MatrixXd::Zero(3, 5), kTol) == 0);

  Eigen::VectorXd u(3), v(4);
  u << 1, -2, 3;
  v << 1, 1, 0, -1;
  CHECK(numerical_rank(u * v.transpose(), kTol) == 1);

  Eigen::MatrixXd nearly = Eigen::MatrixXd::Identity(2, 2);
  nearly(1, 1) = 1e-15;  // below rank_rtol * sigma_max * dim
  CHECK(numerical_rank(nearly, kTol) == 1);
  nearly(1, 1) = 1e-6;  // well above it
  CHECK(numerical_rank(nearly, kTol) == 2);
}

TEST_CASE("rank rejects non-finite input") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Ones(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(numerical_rank(bad, kTol), std::invalid_argument);
}

TEST_CASE("null space is an orthonormal annihilated basis") {
  Eigen::MatrixXd A(2, 4);
  A << 1, 1, 0, 0, 0, 0, 1, -1;
  Eigen::MatrixXd K = null_space(A, kTol);
  REQUIRE(K.cols() == 2);
  CHECK((A * K).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((K.transpose() * K - Eigen::MatrixXd::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(null_space(Eigen::MatrixXd::Identity(3, 3), kTol).cols() == 0);
}

TEST_CASE("range basis spans the image") {
  Eigen::VectorXd u(3), v(4);
  u << 2, 0, -1;
  v << 1, 2, 3, 4;
  Eigen::MatrixXd R = range_basis(u * v.transpose(), kTol);
  REQUIRE(R.cols() == 1);
  // R's column is parallel to u
  double cosine = std::abs(R.col(0).dot(u.normalized()));
  CHECK(cosine == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("subspace intersection finds the shared line of two planes") {
  // plane {x=0} and plane {y=0} in R^3 share the z axis
  Eigen::MatrixXd A(3, 2), B(3, 2);
  A << 0, 0, 1, 0, 0, 1;
  B << 1, 0, 0, 0, 0, 1;
  Eigen::MatrixXd I1 = intersect_known_dim(A, B, 1);
  REQUIRE(I1.cols() == 1);
  CHECK(std::abs(I1(2, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(I1(0, 0)) < 1e-12);
  CHECK(std::abs(I1(1, 0)) < 1e-12);
  // asking for a 2-dimensional intersection must fail loudly
  CHECK_THROWS_AS(intersect_known_dim(A, B, 2), std::runtime_error);
}

TEST_CASE("minimum-norm solve is orthogonal to the kernel") {
  Eigen::MatrixXd A(1, 3);
  A << 1, 1, 1;
  Eigen::VectorXd b(1);
  b << 3;
  Eigen::VectorXd x = min_norm_solve(A, b, kTol);
  CHECK((A * x - b).cwiseAbs().maxCoeff() < 1e-12);
  // the minimum-norm solution of x1+x2+x3=3 is (1,1,1)
  CHECK(x.isApprox(Eigen::VectorXd::Ones(3), 1e-12));
}

TEST_CASE("orthonormal columns reproduce the spanned projector") {
  Eigen::MatrixXd A(4, 3);
  A << 1, 2, 3, 0, 1, 1, 1, 0, 1, 2, 2, 4;  // column 3 = column 1 + column 2
  Eigen::MatrixXd Q = orthonormal_columns(A, 2);
  REQUIRE(Q.cols() == 2);
  CHECK((Q.transpose() * Q - Eigen::MatrixXd::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  // projector onto span(Q) fixes every column of A
  Eigen::MatrixXd P = Q * Q.transpose();
  CHECK((P * A - A).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("matrix exponential agrees with closed forms") {
  Eigen::MatrixXd nil(2, 2);
  nil << 0, 1, 0, 0;
  Eigen::MatrixXd expected(2, 2);
  expected << 1, 1, 0, 1;
  CHECK(expm(nil).isApprox(expected, 1e-14));

  Eigen::MatrixXd diag = Eigen::Vector2d(1.0, -2.0).asDiagonal();
  CHECK(expm(diag)(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(expm(diag)(1, 1) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

  const double th = 0.7;
  Eigen::MatrixXd rot(2, 2);
  rot << 0, -th, th, 0;
  Eigen::MatrixXd R = expm(rot);
  CHECK(R(0, 0) == doctest::Approx(std::cos(th)).epsilon(1e-14));
  CHECK(R(1, 0) == doctest::Approx(std::sin(th)).epsilon(1e-14));
}
