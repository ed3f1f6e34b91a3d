#pragma once

#include <Eigen/Dense>

#include "edgesync/tolerance.hpp"

namespace edgesync {

// Singular-value cutoff used by the rank and null-space routines:
// rank_rtol * sigma_max * max(rows, cols).
double rank_cutoff(const Eigen::VectorXd& singular_values, int rows, int cols,
                   const TolerancePolicy& tol);

// Number of singular values above the cutoff. Throws on non-finite entries.
int numerical_rank(const Eigen::MatrixXd& A, const TolerancePolicy& tol);

// Orthonormal basis of the numerical kernel (columns; may have zero columns).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, const TolerancePolicy& tol);

// Orthonormal basis of the numerical column space.
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& A, const TolerancePolicy& tol);

// Top `dim` principal directions shared by two orthonormal bases, returned as
// orthonormal columns in ambient coordinates. The caller knows the expected
// intersection dimension; the smallest accepted principal cosine must still
// be close to one, otherwise the subspaces do not actually intersect that
// deeply and a std::runtime_error is thrown.
Eigen::MatrixXd intersect_known_dim(const Eigen::MatrixXd& A_basis,
                                    const Eigen::MatrixXd& B_basis, int dim);

// Minimum-norm least-squares solution via the SVD pseudoinverse.
Eigen::VectorXd min_norm_solve(const Eigen::MatrixXd& A,
                               const Eigen::VectorXd& b,
                               const TolerancePolicy& tol);

// First `count` orthonormal columns spanning the dominant column space of A
// (column-pivoted QR).
Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& A, int count);

// Dense matrix exponential (scaling-and-squaring).
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

}  // namespace edgesync
