#pragma once

namespace edgesync {

// Single knob set for all numerical decisions, passed explicitly so that
// reports can echo exactly what was used.
struct TolerancePolicy {
  double rank_rtol = 1e-9;    // singular values below rtol*sigma_max*max(rows,cols) count as zero
  double eig_zero_tol = 1e-8; // eigenvalue clustering / projector comparison tolerance
  double sim_tol = 1e-6;      // trajectory-level objective checks
};

}  // namespace edgesync
