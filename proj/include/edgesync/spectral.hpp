#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "edgesync/graph.hpp"
#include "edgesync/incidence.hpp"
#include "edgesync/linalg.hpp"
#include "edgesync/tolerance.hpp"

namespace edgesync {

// One length-2 chain of the zero eigenvalue of Le:
//   Le * vr_head = 0,        Le * vr_tail = vr_head,
//   vl_tail^T * Le = 0,      vl_head^T * Le = vl_tail^T.
struct ZeroModeChain {
  Eigen::VectorXd vr_head, vr_tail, vl_head, vl_tail;
};

// A non-defective zero mode: Le * vr = 0 and vl^T * Le = 0.
struct ZeroModeSimple {
  Eigen::VectorXd vr, vl;
};

// Complete zero-eigenvalue structure of the edge Laplacian. gamma is the
// geometric multiplicity, xi the algebraic one; chains have length at most
// two, so xi = dim ker(Le^2). Vr / Vl stack the right / left vectors as
// columns in the order [chain1 head, chain1 tail, ..., simples], matched so
// that Vl^T * Vr = I. Pi0 = Vr * Vl^T projects onto the zero generalized
// eigenspace; Lambda keeps the simple modes plus, per chain, only the
// head-right with its paired left vector, and satisfies
// lim_{t->inf} e(t) = Lambda * Es^T * x(0) for edge states derived from node
// trajectories.
struct ZeroEigenstructure {
  int gamma = 0;
  int xi = 0;
  std::vector<ZeroModeChain> chains;
  std::vector<ZeroModeSimple> simples;
  Eigen::MatrixXd Vr, Vl;      // M x xi
  Eigen::MatrixXd Pi0, Lambda; // M x M

  struct Residuals {
    double chain_relations = 0.0;
    double biorthogonality = 0.0;
    double idempotency = 0.0;
    double nilpotency = 0.0;          // ||(Pi0*Le)^2||
    double limit_annihilation = 0.0;  // ||Lambda*Le*Es^T||
  } residuals;
};

// Computes the structure above. Throws std::runtime_error when the nonzero
// spectrum of Le comes within a factor 10 of the rank cutoff (the zero
// cluster cannot be separated reliably).
ZeroEigenstructure zero_eigenstructure(const Eigen::MatrixXd& Le,
                                       const Eigen::MatrixXd& Es,
                                       const TolerancePolicy& tol);

struct MultiplicityPrediction {
  int gamma = 0;
  int xi = 0;
  std::string case_id;  // which structural case produced the numbers
};

// Zero-eigenvalue multiplicities of Le from structure alone.
// Spanning-tree graphs (single leader group):
//   balanced graph                      -> (M-N+1, M-N+1)   "tree-sb"
//   unbalanced, source is a root        -> (M-N+1, M-N+1)   "tree-sub-root"
//   unbalanced, source is balanced SCC  -> (M-N,   M-N+1)   "tree-sub-sb-scc"
//   unbalanced, source is unbalanced SCC-> (M-N,   M-N)     "tree-sub-sub-scc"
// Multi-leader graphs:
//   balanced,   l1 > 1, l2sb = 0        -> (M-N+l1, M-N+l1)         "multi-sb-roots-only"
//   balanced,   l1 = 0, l2sb > 1        -> (M-N+1,  M-N+l2sb)       "multi-sb-sccs-only"
//   balanced,   l1 >= 1, l2sb >= 1      -> (M-N+l1, M-N+l1+l2sb)    "multi-sb-mixed"
//   unbalanced, l2sb = 0                -> (M-N+l1, M-N+l1)         "multi-sub-no-sb-scc"
//   unbalanced, l2sb > 0                -> (M-N+l1, M-N+l1+l2sb)    "multi-sub-with-sb-scc"
// Requires a spanning tree or a multi-leader graph (throws otherwise).
MultiplicityPrediction predict_multiplicities(const LeaderStructure& ls,
                                              bool sb, bool spanning_tree,
                                              int N, int M);

enum class NullSpaceRelation { Equal, NotEqual };

// Compares ker(Le^T) with ker(Es) via their orthogonal projectors.
NullSpaceRelation null_space_relation(const Eigen::MatrixXd& Le,
                                      const Eigen::MatrixXd& Es,
                                      const TolerancePolicy& tol);

// Structural prediction: the kernels coincide exactly when the graph has no
// root node, or is balanced with a single root node (ker(Es) always sits
// inside ker(Le^T); equality is a question of matching ranks).
NullSpaceRelation predicted_null_space_relation(bool spanning_tree, bool sb,
                                                int l1);

const char* to_string(NullSpaceRelation r);

// Computed vs. predicted ranks and multiplicities for one graph.
struct SpectralReport {
  bool sb = false;
  bool spanning_tree = false;
  int rank_es = 0, rank_es_in = 0, rank_ls = 0, rank_le = 0;
  int pred_rank_es = 0, pred_rank_es_in = 0, pred_rank_ls = 0, pred_rank_le = 0;
  int gamma = 0, xi = 0;
  int pred_gamma = 0, pred_xi = 0;
  std::string multiplicity_case;
  bool ranks_match = false;
  bool multiplicities_match = false;
  NullSpaceRelation ns_relation = NullSpaceRelation::NotEqual;
  NullSpaceRelation ns_relation_predicted = NullSpaceRelation::NotEqual;
  bool ns_relation_match = false;
  TolerancePolicy tol;
};

// Rank predictions: rank(EsIn) = N - l1 always; rank(Es) = N-1 for balanced
// graphs and N otherwise; rank(Ls) = N - l1 - l2sb; rank(Le) = M - gamma.
SpectralReport rank_report(const SignedDigraph& g, const LeaderStructure& ls,
                           const IncidenceSet& inc, const TolerancePolicy& tol);

}  // namespace edgesync
