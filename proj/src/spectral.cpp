#include "edgesync/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace edgesync {

namespace {

// Smallest nonzero eigenvalue magnitude must clear the rank cutoff by a
// decade, otherwise the zero cluster is not numerically separable.
void check_zero_separation(const Eigen::MatrixXd& Le,
                           const TolerancePolicy& tol) {
  if (Le.rows() == 0) return;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Le);
  double tau = rank_cutoff(svd.singularValues(), static_cast<int>(Le.rows()),
                           static_cast<int>(Le.cols()), tol);
  double scale = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;

  Eigen::EigenSolver<Eigen::MatrixXd> es(Le, false);
  double zero_cut = tol.eig_zero_tol * std::max(1.0, scale);
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double mag = std::abs(es.eigenvalues()(i));
    if (mag > zero_cut) gap = std::min(gap, mag);
  }
  if (std::isfinite(gap) && gap < 10.0 * tau)
    throw std::runtime_error(
        "zero eigenvalue cluster of the edge Laplacian is not separable: "
        "smallest nonzero magnitude " +
        std::to_string(gap) + " vs rank cutoff " + std::to_string(tau));
}

}  // namespace

ZeroEigenstructure zero_eigenstructure(const Eigen::MatrixXd& Le,
                                       const Eigen::MatrixXd& Es,
                                       const TolerancePolicy& tol) {
  const int M = static_cast<int>(Le.rows());
  if (Le.cols() != M) throw std::invalid_argument("Le must be square");

  check_zero_separation(Le, tol);

  ZeroEigenstructure z;
  z.gamma = M - numerical_rank(Le, tol);
  z.xi = M - numerical_rank(Le * Le, tol);  // chains never exceed length two
  z.Pi0 = Eigen::MatrixXd::Zero(M, M);
  z.Lambda = Eigen::MatrixXd::Zero(M, M);
  z.Vr = Eigen::MatrixXd(M, z.xi);
  z.Vl = Eigen::MatrixXd(M, z.xi);
  if (z.xi == 0) return z;

  const int n_chains = z.xi - z.gamma;
  const int n_simples = 2 * z.gamma - z.xi;

  // Right side: chain heads span ker(Le) intersected with range(Le); each
  // tail is a minimum-norm preimage of its head. Simple modes are the rest of
  // the kernel.
  Eigen::MatrixXd K = null_space(Le, tol);
  Eigen::MatrixXd H(M, n_chains), T(M, n_chains);
  if (n_chains > 0) {
    Eigen::MatrixXd R = range_basis(Le, tol);
    H = intersect_known_dim(K, R, n_chains);
    for (int c = 0; c < n_chains; ++c) T.col(c) = min_norm_solve(Le, H.col(c), tol);
  }
  Eigen::MatrixXd S(M, n_simples);
  if (n_simples > 0) {
    Eigen::MatrixXd residual = K - H * (H.transpose() * K);
    S = orthonormal_columns(residual, n_simples);
  }

  // Left side: the same construction on Le^T yields the annihilating left
  // vectors (chain tails) first; solving Le^T x = vl_tail recovers the heads.
  Eigen::MatrixXd LeT = Le.transpose();
  Eigen::MatrixXd Kl = null_space(LeT, tol);
  Eigen::MatrixXd Hl(M, n_chains), Tl(M, n_chains);
  if (n_chains > 0) {
    Eigen::MatrixXd Rl = range_basis(LeT, tol);
    Hl = intersect_known_dim(Kl, Rl, n_chains);
    for (int c = 0; c < n_chains; ++c)
      Tl.col(c) = min_norm_solve(LeT, Hl.col(c), tol);
  }
  Eigen::MatrixXd Sl(M, n_simples);
  if (n_simples > 0) {
    Eigen::MatrixXd residual = Kl - Hl * (Hl.transpose() * Kl);
    Sl = orthonormal_columns(residual, n_simples);
  }

  // Column order [head_1, tail_1, ..., simples]; the left stack pairs each
  // right head with the left head (the non-annihilating left vector).
  for (int c = 0; c < n_chains; ++c) {
    z.Vr.col(2 * c) = H.col(c);
    z.Vr.col(2 * c + 1) = T.col(c);
    z.Vl.col(2 * c) = Tl.col(c);
    z.Vl.col(2 * c + 1) = Hl.col(c);
  }
  for (int s = 0; s < n_simples; ++s) {
    z.Vr.col(2 * n_chains + s) = S.col(s);
    z.Vl.col(2 * n_chains + s) = Sl.col(s);
  }

  // Rescale the left stack so Vl^T Vr = I. The correction commutes with the
  // chain structure, so the relations above survive exactly.
  Eigen::MatrixXd C = z.Vr.transpose() * z.Vl;  // xi x xi
  Eigen::FullPivLU<Eigen::MatrixXd> lu(C);
  if (!lu.isInvertible())
    throw std::runtime_error(
        "left/right zero eigenspaces are numerically degenerate");
  z.Vl = z.Vl * lu.inverse();

  for (int c = 0; c < n_chains; ++c) {
    ZeroModeChain chain;
    chain.vr_head = z.Vr.col(2 * c);
    chain.vr_tail = z.Vr.col(2 * c + 1);
    chain.vl_head = z.Vl.col(2 * c);
    chain.vl_tail = z.Vl.col(2 * c + 1);
    z.chains.push_back(std::move(chain));
  }
  for (int s = 0; s < n_simples; ++s) {
    ZeroModeSimple simple;
    simple.vr = z.Vr.col(2 * n_chains + s);
    simple.vl = z.Vl.col(2 * n_chains + s);
    z.simples.push_back(std::move(simple));
  }

  z.Pi0 = z.Vr * z.Vl.transpose();
  Eigen::VectorXd mask = Eigen::VectorXd::Ones(z.xi);
  for (int c = 0; c < n_chains; ++c) mask(2 * c + 1) = 0.0;  // drop tails
  z.Lambda = z.Vr * mask.asDiagonal() * z.Vl.transpose();

  double rel = 0.0;
  for (const auto& ch : z.chains) {
    rel = std::max(rel, (Le * ch.vr_head).norm());
    rel = std::max(rel, (Le * ch.vr_tail - ch.vr_head).norm());
    rel = std::max(rel, (LeT * ch.vl_tail).norm());
    rel = std::max(rel, (LeT * ch.vl_head - ch.vl_tail).norm());
  }
  for (const auto& si : z.simples) {
    rel = std::max(rel, (Le * si.vr).norm());
    rel = std::max(rel, (LeT * si.vl).norm());
  }
  z.residuals.chain_relations = rel;
  z.residuals.biorthogonality =
      (z.Vl.transpose() * z.Vr - Eigen::MatrixXd::Identity(z.xi, z.xi)).norm();
  z.residuals.idempotency = (z.Pi0 * z.Pi0 - z.Pi0).norm();
  Eigen::MatrixXd P0L = z.Pi0 * Le;
  z.residuals.nilpotency = (P0L * P0L).norm();
  z.residuals.limit_annihilation = (z.Lambda * Le * Es.transpose()).norm();
  return z;
}

MultiplicityPrediction predict_multiplicities(const LeaderStructure& ls,
                                              bool sb, bool spanning_tree,
                                              int N, int M) {
  if (!spanning_tree && ls.group_count() <= 1)
    throw std::invalid_argument(
        "multiplicity prediction requires a spanning tree or multiple leader "
        "groups");
  if (spanning_tree) {
    if (sb) return {M - N + 1, M - N + 1, "tree-sb"};
    switch (ls.groups.at(0).kind) {
      case GroupKind::Root:
        return {M - N + 1, M - N + 1, "tree-sub-root"};
      case GroupKind::SccSB:
        return {M - N, M - N + 1, "tree-sub-sb-scc"};
      case GroupKind::SccSUB:
        return {M - N, M - N, "tree-sub-sub-scc"};
    }
    throw std::logic_error("unreachable");
  }
  const int l1 = ls.l1, l2sb = ls.l2sb;
  if (sb) {
    // A balanced graph has no unbalanced subgraph, so l2sub = 0 here.
    if (l1 > 1 && l2sb == 0)
      return {M - N + l1, M - N + l1, "multi-sb-roots-only"};
    if (l1 == 0 && l2sb > 1)
      return {M - N + 1, M - N + l2sb, "multi-sb-sccs-only"};
    if (l1 >= 1 && l2sb >= 1)
      return {M - N + l1, M - N + l1 + l2sb, "multi-sb-mixed"};
    throw std::logic_error("impossible balanced multi-leader composition");
  }
  if (l2sb == 0) return {M - N + l1, M - N + l1, "multi-sub-no-sb-scc"};
  return {M - N + l1, M - N + l1 + l2sb, "multi-sub-with-sb-scc"};
}

NullSpaceRelation null_space_relation(const Eigen::MatrixXd& Le,
                                      const Eigen::MatrixXd& Es,
                                      const TolerancePolicy& tol) {
  Eigen::MatrixXd Nl = null_space(Le.transpose(), tol);
  Eigen::MatrixXd Ne = null_space(Es, tol);
  if (Nl.cols() != Ne.cols()) return NullSpaceRelation::NotEqual;
  if (Nl.cols() == 0) return NullSpaceRelation::Equal;
  double dist = (Nl * Nl.transpose() - Ne * Ne.transpose()).norm();
  return dist <= tol.eig_zero_tol ? NullSpaceRelation::Equal
                                  : NullSpaceRelation::NotEqual;
}

NullSpaceRelation predicted_null_space_relation(bool spanning_tree, bool sb,
                                                int l1) {
  // ker(Es) is always contained in ker(Le^T), so the spaces coincide exactly
  // when the predicted ranks of Es and Le agree. Unbalanced: rank(Es) = N and
  // rank(Le) = N - l1, so l1 must be zero. Balanced: rank(Es) = N - 1 and
  // rank(Le) = N - max(l1, 1), so at most one root is allowed. A balanced
  // spanning-tree graph always has l1 <= 1, which recovers the tree rule.
  (void)spanning_tree;
  if (l1 == 0) return NullSpaceRelation::Equal;
  return (sb && l1 == 1) ? NullSpaceRelation::Equal
                         : NullSpaceRelation::NotEqual;
}

const char* to_string(NullSpaceRelation r) {
  return r == NullSpaceRelation::Equal ? "Equal" : "NotEqual";
}

SpectralReport rank_report(const SignedDigraph& g, const LeaderStructure& ls,
                           const IncidenceSet& inc, const TolerancePolicy& tol) {
  const int N = g.node_count(), M = g.edge_count();
  SpectralReport rep;
  rep.tol = tol;
  rep.sb = is_structurally_balanced(g).balanced;
  rep.spanning_tree = has_directed_spanning_tree(g);
  require_assumptions(g, ls, rep.spanning_tree);

  rep.rank_es = numerical_rank(inc.Es, tol);
  rep.rank_es_in = numerical_rank(inc.EsIn, tol);
  rep.rank_ls = numerical_rank(inc.Ls, tol);
  rep.rank_le = numerical_rank(inc.Le, tol);
  rep.gamma = M - rep.rank_le;
  rep.xi = M - numerical_rank(inc.Le * inc.Le, tol);

  MultiplicityPrediction mp =
      predict_multiplicities(ls, rep.sb, rep.spanning_tree, N, M);
  rep.pred_gamma = mp.gamma;
  rep.pred_xi = mp.xi;
  rep.multiplicity_case = mp.case_id;
  rep.pred_rank_es = rep.sb ? N - 1 : N;
  rep.pred_rank_es_in = N - ls.l1;
  rep.pred_rank_ls = N - ls.l1 - ls.l2sb;
  rep.pred_rank_le = M - mp.gamma;

  rep.ranks_match = rep.rank_es == rep.pred_rank_es &&
                    rep.rank_es_in == rep.pred_rank_es_in &&
                    rep.rank_ls == rep.pred_rank_ls &&
                    rep.rank_le == rep.pred_rank_le;
  rep.multiplicities_match =
      rep.gamma == rep.pred_gamma && rep.xi == rep.pred_xi;

  rep.ns_relation = null_space_relation(inc.Le, inc.Es, tol);
  rep.ns_relation_predicted =
      predicted_null_space_relation(rep.spanning_tree, rep.sb, ls.l1);
  rep.ns_relation_match = rep.ns_relation == rep.ns_relation_predicted;
  return rep;
}

}  // namespace edgesync
