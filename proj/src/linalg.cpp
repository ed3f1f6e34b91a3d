#include "edgesync/linalg.hpp"

#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace edgesync {

namespace {

void require_finite(const Eigen::MatrixXd& A) {
  if (!A.allFinite())
    throw std::invalid_argument("matrix contains non-finite entries");
}

}  // namespace

double rank_cutoff(const Eigen::VectorXd& singular_values, int rows, int cols,
                   const TolerancePolicy& tol) {
  double smax = singular_values.size() > 0 ? singular_values(0) : 0.0;
  return tol.rank_rtol * smax * static_cast<double>(std::max(rows, cols));
}

int numerical_rank(const Eigen::MatrixXd& A, const TolerancePolicy& tol) {
  require_finite(A);
  if (A.rows() == 0 || A.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  const Eigen::VectorXd& sv = svd.singularValues();
  double cutoff = rank_cutoff(sv, static_cast<int>(A.rows()),
                              static_cast<int>(A.cols()), tol);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, const TolerancePolicy& tol) {
  require_finite(A);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  double cutoff = rank_cutoff(sv, static_cast<int>(A.rows()),
                              static_cast<int>(A.cols()), tol);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(A.cols() - rank);
}

Eigen::MatrixXd range_basis(const Eigen::MatrixXd& A, const TolerancePolicy& tol) {
  require_finite(A);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU);
  const Eigen::VectorXd& sv = svd.singularValues();
  double cutoff = rank_cutoff(sv, static_cast<int>(A.rows()),
                              static_cast<int>(A.cols()), tol);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXd intersect_known_dim(const Eigen::MatrixXd& A_basis,
                                    const Eigen::MatrixXd& B_basis, int dim) {
  if (dim == 0) return Eigen::MatrixXd(A_basis.rows(), 0);
  if (dim > A_basis.cols() || dim > B_basis.cols())
    throw std::runtime_error("requested intersection exceeds subspace sizes");
  // Principal cosines of the pair are the singular values of A^T B; cosines
  // near one mark shared directions.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A_basis.transpose() * B_basis,
                                        Eigen::ComputeFullU);
  double worst = svd.singularValues()(dim - 1);
  if (worst < 1.0 - 1e-6)
    throw std::runtime_error(
        "subspace intersection is ill-conditioned: principal cosine " +
        std::to_string(worst));
  return A_basis * svd.matrixU().leftCols(dim);
}

Eigen::VectorXd min_norm_solve(const Eigen::MatrixXd& A,
                               const Eigen::VectorXd& b,
                               const TolerancePolicy& tol) {
  require_finite(A);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  double cutoff = rank_cutoff(sv, static_cast<int>(A.rows()),
                              static_cast<int>(A.cols()), tol);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * b;
}

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& A, int count) {
  if (count == 0) return Eigen::MatrixXd(A.rows(), 0);
  if (count > A.cols())
    throw std::invalid_argument("requested more columns than available");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd Q =
      qr.householderQ() * Eigen::MatrixXd::Identity(A.rows(), count);
  return Q;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
  require_finite(A);
  return A.exp();
}

}  // namespace edgesync
