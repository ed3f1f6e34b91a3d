#pragma once

#include <Eigen/Dense>
#include <vector>

#include "edgesync/spectral.hpp"
#include "edgesync/tolerance.hpp"

namespace edgesync {

// Certificate for the modified Lyapunov equation
//   P*Le + Le^T*P + sum_i alpha_i * (P*vr_i*vl_i^T + vl_i*vr_i^T*P) = Q
// with one alpha per zero mode (xi in total). residual is the Frobenius norm
// of the mismatch after substituting P back in.
struct LyapunovCertificate {
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  std::vector<double> alphas;
  double residual = 0.0;
  double min_eig_P = 0.0;
  double max_eig_P = 0.0;
};

// Solves the equation above by shifting: with A = Le + Vr*diag(alpha)*Vl^T
// it is exactly the standard equation P*A + A^T*P = Q, and A has spectrum
// (nonzero spectrum of Le) union {alpha_i}, all in the open right half plane.
// The standard equation is solved densely via vectorization, then symmetrized.
// Throws std::invalid_argument for a non-symmetric-positive-definite Q, a
// nonpositive alpha, or an alpha count different from xi; throws
// std::runtime_error when the shifted operator still has an eigenvalue with
// nonpositive real part (the structural assumptions do not hold).
LyapunovCertificate solve_P(const Eigen::MatrixXd& Le,
                            const ZeroEigenstructure& zes,
                            const Eigen::MatrixXd& Q,
                            const std::vector<double>& alphas,
                            const TolerancePolicy& tol);

// V(ebar) = 1/2 * ebar^T * P * ebar.
double evaluate_V(const LyapunovCertificate& cert, const Eigen::VectorXd& ebar);

// Analytic derivative of V along the error dynamics:
// -1/2 * k1 * ebar^T * Q * ebar.
double evaluate_Vdot_bound(const Eigen::MatrixXd& Q, double k1,
                           const Eigen::VectorXd& ebar);

}  // namespace edgesync
