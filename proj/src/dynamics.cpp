#include "edgesync/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace edgesync {

double max_abs(const Eigen::MatrixXd& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

namespace {

constexpr double kEdgeConsistencyTol = 1e-8;

long long step_count(const SimulationConfig& cfg) {
  if (cfg.k1 <= 0.0) throw std::invalid_argument("k1 must be positive");
  if (cfg.dt <= 0.0) throw std::invalid_argument("dt must be positive");
  if (cfg.t_final < cfg.dt)
    throw std::invalid_argument("t_final must be at least dt");
  if (cfg.record_every < 1)
    throw std::invalid_argument("record_every must be positive");
  long long n = std::llround(cfg.t_final / cfg.dt);
  if (std::abs(static_cast<double>(n) * cfg.dt - cfg.t_final) >
      1e-9 * std::max(1.0, cfg.t_final))
    throw std::invalid_argument("t_final must be an integer multiple of dt");
  return n;
}

}  // namespace

Eigen::VectorXd node_field(const Eigen::MatrixXd& Ls, double k1,
                           const Eigen::VectorXd& x) {
  if (Ls.cols() != x.size())
    throw std::invalid_argument("state dimension does not match Ls");
  return -k1 * (Ls * x);
}

Eigen::VectorXd edge_field(const Eigen::MatrixXd& Le, double k1,
                           const Eigen::VectorXd& e) {
  if (Le.cols() != e.size())
    throw std::invalid_argument("state dimension does not match Le");
  return -k1 * (Le * e);
}

Eigen::VectorXd edge_average(const ZeroEigenstructure& zes,
                             const Eigen::VectorXd& e) {
  if (zes.Pi0.cols() != e.size())
    throw std::invalid_argument("edge state dimension does not match Pi0");
  return zes.Pi0 * e;
}

Eigen::VectorXd sync_error(const ZeroEigenstructure& zes,
                           const Eigen::VectorXd& e) {
  return e - edge_average(zes, e);
}

Eigen::MatrixXd integrate(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& field,
    const Eigen::VectorXd& y0, const SimulationConfig& cfg,
    std::vector<double>* times_out) {
  const long long nsteps = step_count(cfg);
  const double dt = cfg.dt;

  std::vector<long long> record;
  for (long long i = 0; i <= nsteps; ++i)
    if (i % cfg.record_every == 0 || i == nsteps) record.push_back(i);

  Eigen::MatrixXd out(record.size(), y0.size());
  if (times_out) {
    times_out->clear();
    for (long long i : record) times_out->push_back(static_cast<double>(i) * dt);
  }

  Eigen::VectorXd y = y0;
  std::size_t next = 0;
  if (record[next] == 0) out.row(next++) = y.transpose();
  for (long long i = 0; i < nsteps; ++i) {
    Eigen::VectorXd k1v = field(y);
    Eigen::VectorXd k2v = field(y + 0.5 * dt * k1v);
    Eigen::VectorXd k3v = field(y + 0.5 * dt * k2v);
    Eigen::VectorXd k4v = field(y + dt * k3v);
    y += (dt / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    if (!y.allFinite())
      throw std::runtime_error("non-finite state at t = " +
                               std::to_string(static_cast<double>(i + 1) * dt));
    if (next < record.size() && record[next] == i + 1)
      out.row(next++) = y.transpose();
  }
  return out;
}

Trajectory simulate(const SignedDigraph& g, const IncidenceSet& inc,
                    const ZeroEigenstructure& zes, const SimulationConfig& cfg,
                    const LyapunovCertificate* cert) {
  const int N = g.node_count();
  if (cfg.x0.size() != N)
    throw std::invalid_argument("x0 must have one entry per node (" +
                                std::to_string(N) + ")");

  Trajectory traj;
  if (inc.Le.size() > 0) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(inc.Le, false);
    double rho = es.eigenvalues().cwiseAbs().maxCoeff();
    traj.stability_warning = rho > 0.0 && cfg.dt > 2.0 / (cfg.k1 * rho);
  }

  Eigen::MatrixXd A = -cfg.k1 * inc.Ls;
  traj.X = integrate([&](const Eigen::VectorXd& x) { return A * x; }, cfg.x0,
                     cfg, &traj.times);
  traj.E = traj.X * inc.Es;  // row k is (Es^T x_k)^T
  traj.Em = traj.E * zes.Pi0.transpose();
  traj.Ebar = traj.E - traj.Em;

  // Cross-check: the edge states must also satisfy their own linear dynamics.
  Eigen::MatrixXd B = -cfg.k1 * inc.Le;
  Eigen::VectorXd e0 = inc.Es.transpose() * cfg.x0;
  Eigen::MatrixXd Ecross = integrate(
      [&](const Eigen::VectorXd& e) { return B * e; }, e0, cfg, nullptr);
  traj.edge_cross_check = max_abs(Ecross - traj.E);
  if (traj.edge_cross_check > kEdgeConsistencyTol)
    throw std::runtime_error(
        "edge integration deviates from node-derived edge states by " +
        std::to_string(traj.edge_cross_check));

  if (cert) {
    traj.V.resize(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i)
      traj.V[i] = evaluate_V(*cert, traj.Ebar.row(i).transpose());
  }

  traj.final_diag.e_final = traj.E.bottomRows(1).transpose();
  traj.final_diag.predicted_e_limit = predict_edge_limit(zes, inc.Es, cfg.x0);
  traj.final_diag.ebar_final_norm = max_abs(traj.Ebar.bottomRows(1));
  traj.final_diag.limit_error = max_abs(traj.final_diag.e_final -
                                        traj.final_diag.predicted_e_limit);
  return traj;
}

Eigen::VectorXd predict_edge_limit(const ZeroEigenstructure& zes,
                                   const Eigen::MatrixXd& Es,
                                   const Eigen::VectorXd& x0) {
  if (Es.rows() != x0.size())
    throw std::invalid_argument("x0 dimension does not match Es");
  return zes.Lambda * (Es.transpose() * x0);
}

Eigen::VectorXd expm_edge_oracle(const Eigen::MatrixXd& Le, double k1, double T,
                                 const Eigen::VectorXd& e0) {
  if (Le.cols() != e0.size())
    throw std::invalid_argument("e0 dimension does not match Le");
  Eigen::VectorXd result = expm(-k1 * T * Le) * e0;
  if (!result.allFinite())
    throw std::runtime_error("matrix exponential produced non-finite values");
  return result;
}

double edge_average_drift(const Trajectory& traj) {
  if (traj.Em.size() == 0) return 0.0;
  return (traj.Em.rowwise() - traj.Em.row(0)).cwiseAbs().maxCoeff();
}

}  // namespace edgesync
