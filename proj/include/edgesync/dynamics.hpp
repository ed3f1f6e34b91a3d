#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "edgesync/incidence.hpp"
#include "edgesync/lyapunov.hpp"
#include "edgesync/spectral.hpp"

namespace edgesync {

struct SimulationConfig {
  double k1 = 4.0;
  Eigen::VectorXd x0;
  double t_final = 10.0;
  double dt = 1e-3;       // t_final must be an integer multiple of dt
  int record_every = 10;  // subsampling of the recording grid
};

struct FinalDiagnostics {
  double ebar_final_norm = 0.0;  // max-norm of the last synchronization error
  Eigen::VectorXd e_final;
  Eigen::VectorXd predicted_e_limit;
  double limit_error = 0.0;  // max-norm distance between the two above
};

// Recorded quantities, one row per recorded time. E is the edge view of X
// (row k = Es^T x). Em rows are the projection Pi0*e; Ebar is stored as
// E - Em so the decomposition is exact as stored. V is filled only when a
// certificate is supplied to simulate().
struct Trajectory {
  std::vector<double> times;
  Eigen::MatrixXd X, E, Ebar, Em;
  std::vector<double> V;
  FinalDiagnostics final_diag;
  double edge_cross_check = 0.0;  // max deviation of the co-integrated edge ODE
  bool stability_warning = false; // dt exceeded 2/(k1 * spectral radius)
};

// Vector fields of the node and edge dynamics.
Eigen::VectorXd node_field(const Eigen::MatrixXd& Ls, double k1,
                           const Eigen::VectorXd& x);
Eigen::VectorXd edge_field(const Eigen::MatrixXd& Le, double k1,
                           const Eigen::VectorXd& e);

// em = Pi0 * e and ebar = e - em.
Eigen::VectorXd edge_average(const ZeroEigenstructure& zes,
                             const Eigen::VectorXd& e);
Eigen::VectorXd sync_error(const ZeroEigenstructure& zes,
                           const Eigen::VectorXd& e);

// Classical fixed-step fourth-order Runge-Kutta over an autonomous field.
// Records rows at t = 0, every record_every-th step, and the final step.
// Throws std::invalid_argument on bad config and std::runtime_error when the
// state stops being finite (the offending time is named).
Eigen::MatrixXd integrate(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& field,
    const Eigen::VectorXd& y0, const SimulationConfig& cfg,
    std::vector<double>* times_out);

// Integrates the node dynamics, derives edge states / averages / errors,
// co-integrates the edge dynamics from e(0) = Es^T x0 as a cross-check
// (agreement within 1e-8 is asserted), evaluates V when a certificate is
// given, and fills the final diagnostics.
Trajectory simulate(const SignedDigraph& g, const IncidenceSet& inc,
                    const ZeroEigenstructure& zes, const SimulationConfig& cfg,
                    const LyapunovCertificate* cert = nullptr);

// Asymptotic edge state Lambda * Es^T * x0.
Eigen::VectorXd predict_edge_limit(const ZeroEigenstructure& zes,
                                   const Eigen::MatrixXd& Es,
                                   const Eigen::VectorXd& x0);

// Independent oracle: exp(-k1*Le*T) * e0 via the dense matrix exponential.
Eigen::VectorXd expm_edge_oracle(const Eigen::MatrixXd& Le, double k1, double T,
                                 const Eigen::VectorXd& e0);

// Largest deviation of any Em row from Em at t = 0 (conserved along node-
// derived trajectories).
double edge_average_drift(const Trajectory& traj);

// Max-norm of a matrix or vector; zero for empty arguments.
double max_abs(const Eigen::MatrixXd& A);

}  // namespace edgesync
