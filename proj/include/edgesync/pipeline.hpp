#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgesync/behavior.hpp"
#include "edgesync/dynamics.hpp"
#include "edgesync/graph.hpp"
#include "edgesync/incidence.hpp"
#include "edgesync/lyapunov.hpp"
#include "edgesync/spectral.hpp"
#include "edgesync/tolerance.hpp"

namespace edgesync {

inline constexpr const char* kToolVersion = "0.1.0";

// Structural analysis bundle: everything that can be said about a graph
// before simulating it.
struct Analysis {
  LeaderStructure ls;
  bool sb = false;
  std::optional<GaugeVector> gauge;
  bool spanning_tree = false;
  IncidenceSet inc;
  SpectralReport spectral;
  BehaviorClass predicted_class = BehaviorClass::TrivialConsensus;
  int behavior_case = 0;
};

Analysis analyze_graph(const SignedDigraph& g, const TolerancePolicy& tol);

// Deterministic default initial state used when none is supplied:
// x0_i = ((7*i) mod 13) - 6 for i = 1..N. Covers positive, negative and zero
// entries and is never a kernel element for the fixtures of interest.
Eigen::VectorXd default_x0(int n);

struct CheckOutcome {
  std::string name;
  bool pass = false;
  double value = 0.0;  // measured quantity
  double bound = 0.0;  // threshold it was compared against
};

// Full verification run: structural predictions, zero-structure residuals,
// Lyapunov certificate, simulation invariants, monotone V, and the
// classified objective. `pass` is the conjunction of every check.
struct VerifyOutcome {
  bool pass = false;
  std::vector<CheckOutcome> checks;
  Analysis analysis;
  BehaviorVerdict verdict;
};

// Q defaults to the identity and alphas to all-ones (one per zero mode) when
// left empty. The simulation is always recorded on the full grid so the
// finite-difference check on V has fourth-order accuracy.
VerifyOutcome verify_graph(const SignedDigraph& g, const SimulationConfig& cfg,
                           const TolerancePolicy& tol,
                           const Eigen::MatrixXd& Q = Eigen::MatrixXd(),
                           const std::vector<double>& alphas = {});

// Largest mismatch between the finite-difference derivative of V and the
// analytic -1/2*k1*ebar^T*Q*ebar, normalized by 1e-6*(1 + |analytic|).
// The trajectory must be recorded on the full integration grid
// (record_every = 1); differences use a five-point fourth-order stencil.
double max_vdot_mismatch_ratio(const Trajectory& traj,
                               const Eigen::MatrixXd& Q, double k1, double dt);

// Largest V increase between consecutive recorded samples, normalized by
// (1 + V(0)). Nonpositive when V is monotone nonincreasing.
double max_v_increase(const Trajectory& traj);

// Least-squares slope of log||ebar(t)|| between t = 1 and the first time the
// norm reaches 1e-9. Returns nullopt when the window holds fewer than five
// samples (already converged); the caller treats that as trivially fast.
std::optional<double> decay_slope(const Trajectory& traj);

}  // namespace edgesync
