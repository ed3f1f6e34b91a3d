#include "edgesync/lyapunov.hpp"

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace edgesync {

LyapunovCertificate solve_P(const Eigen::MatrixXd& Le,
                            const ZeroEigenstructure& zes,
                            const Eigen::MatrixXd& Q,
                            const std::vector<double>& alphas,
                            const TolerancePolicy& tol) {
  const int M = static_cast<int>(Le.rows());
  if (Le.cols() != M || Q.rows() != M || Q.cols() != M)
    throw std::invalid_argument("Le and Q must be square with equal size");
  if ((Q - Q.transpose()).norm() > 1e-12 * std::max(1.0, Q.norm()))
    throw std::invalid_argument("Q must be symmetric");
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> qe(Q);
    if (qe.eigenvalues().minCoeff() <= 0.0)
      throw std::invalid_argument("Q must be positive definite");
  }
  if (static_cast<int>(alphas.size()) != zes.xi)
    throw std::invalid_argument("need exactly one alpha per zero mode (" +
                                std::to_string(zes.xi) + ")");
  for (double a : alphas)
    if (a <= 0.0) throw std::invalid_argument("alphas must be positive");

  Eigen::MatrixXd A = Le;
  if (zes.xi > 0) {
    Eigen::VectorXd av =
        Eigen::Map<const Eigen::VectorXd>(alphas.data(), alphas.size());
    A += zes.Vr * av.asDiagonal() * zes.Vl.transpose();
  }

  {
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
    double tau = tol.rank_rtol * A.norm() * M;
    double min_re = es.eigenvalues().real().minCoeff();
    if (min_re <= tau)
      throw std::runtime_error(
          "shifted operator has an eigenvalue with nonpositive real part (" +
          std::to_string(min_re) + "); structural assumptions violated");
  }

  // vec(P*A + A^T*P) = (A^T (x) I + I (x) A^T) vec(P), column-major.
  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(M, M);
  Eigen::MatrixXd K = Eigen::kroneckerProduct(A.transpose(), I) +
                      Eigen::kroneckerProduct(I, A.transpose());
  Eigen::VectorXd q = Eigen::Map<const Eigen::VectorXd>(Q.data(), M * M);
  Eigen::VectorXd p = K.partialPivLu().solve(q);
  Eigen::MatrixXd P = Eigen::Map<const Eigen::MatrixXd>(p.data(), M, M);
  P = 0.5 * (P + P.transpose());

  LyapunovCertificate cert;
  cert.P = P;
  cert.Q = Q;
  cert.alphas = alphas;

  Eigen::MatrixXd mismatch = P * Le + Le.transpose() * P - Q;
  for (int i = 0; i < zes.xi; ++i) {
    Eigen::VectorXd vr = zes.Vr.col(i), vl = zes.Vl.col(i);
    mismatch += alphas[i] * ((P * vr) * vl.transpose() +
                             vl * (vr.transpose() * P));
  }
  cert.residual = mismatch.norm();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> pe(P);
  cert.min_eig_P = pe.eigenvalues().minCoeff();
  cert.max_eig_P = pe.eigenvalues().maxCoeff();
  return cert;
}

double evaluate_V(const LyapunovCertificate& cert, const Eigen::VectorXd& ebar) {
  if (ebar.size() != cert.P.rows())
    throw std::invalid_argument("ebar dimension does not match P");
  return 0.5 * ebar.dot(cert.P * ebar);
}

double evaluate_Vdot_bound(const Eigen::MatrixXd& Q, double k1,
                           const Eigen::VectorXd& ebar) {
  if (ebar.size() != Q.rows())
    throw std::invalid_argument("ebar dimension does not match Q");
  return -0.5 * k1 * ebar.dot(Q * ebar);
}

}  // namespace edgesync
