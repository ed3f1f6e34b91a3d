#include <cctype>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "edgesync/io.hpp"
#include "edgesync/random_graph.hpp"

namespace es = edgesync;

namespace {

std::vector<double> parse_csv_doubles(const std::string& s, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(flag) + ": not a number: '" +
                                  item + "'");
    }
    while (pos < item.size() &&
           std::isspace(static_cast<unsigned char>(item[pos])))
      ++pos;
    if (pos != item.size())
      throw std::invalid_argument(std::string(flag) + ": not a number: '" +
                                  item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw std::invalid_argument(std::string(flag) + ": empty value list");
  return out;
}

Eigen::VectorXd parse_x0(const std::string& spec, int n) {
  std::vector<double> vals = parse_csv_doubles(spec, "--x0");
  if (static_cast<int>(vals.size()) != n)
    throw std::invalid_argument("--x0 needs exactly " + std::to_string(n) +
                                " entries, got " +
                                std::to_string(vals.size()));
  return Eigen::Map<Eigen::VectorXd>(vals.data(), n);
}

Eigen::MatrixXd parse_q(const std::string& spec, int m) {
  if (spec == "identity") return Eigen::MatrixXd::Identity(m, m);
  const std::string prefix = "diag:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<double> vals =
        parse_csv_doubles(spec.substr(prefix.size()), "--q");
    if (static_cast<int>(vals.size()) != m)
      throw std::invalid_argument("--q diag needs exactly " +
                                  std::to_string(m) + " entries, got " +
                                  std::to_string(vals.size()));
    for (double v : vals)
      if (v <= 0.0)
        throw std::invalid_argument("--q diagonal entries must be positive");
    return Eigen::Map<Eigen::VectorXd>(vals.data(), m).asDiagonal();
  }
  throw std::invalid_argument("--q must be 'identity' or 'diag:<csv>'");
}

std::vector<double> parse_alpha(const std::string& spec, int xi) {
  std::vector<double> vals = parse_csv_doubles(spec, "--alpha");
  if (vals.size() == 1)
    return std::vector<double>(static_cast<std::size_t>(xi), vals[0]);
  if (static_cast<int>(vals.size()) != xi)
    throw std::invalid_argument(
        "--alpha needs a scalar or exactly " + std::to_string(xi) +
        " entries (one per zero mode), got " + std::to_string(vals.size()));
  return vals;
}

nlohmann::json tolerance_config(const es::TolerancePolicy& tol) {
  return {{"rank_rtol", tol.rank_rtol},
          {"eig_zero_tol", tol.eig_zero_tol},
          {"sim_tol", tol.sim_tol}};
}

struct SimFlags {
  std::string graph_path;
  std::string x0_spec;
  std::string q_spec = "identity";
  std::string alpha_spec = "1";
  std::string out;
  double k1 = 4.0;
  double t_final = 10.0;
  double dt = 1e-3;
  int record_every = 10;
};

void add_sim_flags(CLI::App* cmd, SimFlags& f, bool with_recording) {
  cmd->add_option("graph", f.graph_path, "Graph JSON file")->required();
  cmd->add_option("--x0", f.x0_spec,
                  "Initial node states as CSV (default: a fixed "
                  "deterministic pattern)");
  cmd->add_option("--k1", f.k1, "Coupling gain")->capture_default_str();
  cmd->add_option("--t", f.t_final, "Final time")->capture_default_str();
  cmd->add_option("--dt", f.dt, "Integration step")->capture_default_str();
  if (with_recording)
    cmd->add_option("--record-every", f.record_every,
                    "Record every k-th integration step")
        ->capture_default_str();
  cmd->add_option("--q", f.q_spec, "Lyapunov right side: identity|diag:<csv>")
      ->capture_default_str();
  cmd->add_option("--alpha", f.alpha_spec,
                  "Zero-mode shifts: scalar or one value per mode")
      ->capture_default_str();
}

int run_analyze(const std::string& path, const std::string& out) {
  es::TolerancePolicy tol;
  es::SignedDigraph g = es::load_graph_file(path);
  es::Analysis a = es::analyze_graph(g, tol);
  std::string text = es::dump_json(es::analysis_json(a));
  if (out.empty())
    std::cout << text;
  else
    es::write_text_file(out, text);
  return 0;
}

int run_simulate(const SimFlags& f) {
  es::TolerancePolicy tol;
  es::SignedDigraph g = es::load_graph_file(f.graph_path);
  es::Analysis a = es::analyze_graph(g, tol);
  if (g.edge_count() == 0)
    throw std::invalid_argument("simulation requires at least one edge");
  es::ZeroEigenstructure zes =
      es::zero_eigenstructure(a.inc.Le, a.inc.Es, tol);
  Eigen::MatrixXd Q = parse_q(f.q_spec, g.edge_count());
  std::vector<double> alphas = parse_alpha(f.alpha_spec, zes.xi);
  es::LyapunovCertificate cert = es::solve_P(a.inc.Le, zes, Q, alphas, tol);

  es::SimulationConfig cfg;
  cfg.k1 = f.k1;
  cfg.t_final = f.t_final;
  cfg.dt = f.dt;
  cfg.record_every = f.record_every;
  cfg.x0 = f.x0_spec.empty() ? es::default_x0(g.node_count())
                             : parse_x0(f.x0_spec, g.node_count());
  es::Trajectory traj = es::simulate(g, a.inc, zes, cfg, &cert);
  es::BehaviorVerdict verdict = es::verify_behavior(
      g, a.ls, a.sb, a.gauge, a.spanning_tree, traj, tol.sim_tol);

  std::string prefix = f.out;
  if (prefix.empty())
    prefix = std::filesystem::path(f.graph_path).stem().string();
  const std::string csv_path = prefix + ".csv";
  const std::string summary_path = prefix + ".summary.json";
  const std::string manifest_path = prefix + ".manifest.json";

  es::write_text_file(csv_path, es::trajectory_to_csv(traj));
  es::write_text_file(
      summary_path, es::dump_json(es::summary_json(a, traj, cert, verdict)));

  std::vector<double> x0_echo(cfg.x0.data(), cfg.x0.data() + cfg.x0.size());
  nlohmann::json config = {{"k1", cfg.k1},
                           {"t_final", cfg.t_final},
                           {"dt", cfg.dt},
                           {"record_every", cfg.record_every},
                           {"x0", x0_echo},
                           {"q", f.q_spec},
                           {"alpha", f.alpha_spec},
                           {"tolerance", tolerance_config(tol)}};
  es::write_text_file(
      manifest_path,
      es::dump_json(es::manifest_json(
          "simulate", {f.graph_path}, config,
          {csv_path, summary_path, manifest_path})));
  return verdict.overall_pass ? 0 : 1;
}

int run_verify(const SimFlags& f) {
  es::TolerancePolicy tol;
  es::SignedDigraph g = es::load_graph_file(f.graph_path);
  es::SimulationConfig cfg;
  cfg.k1 = f.k1;
  cfg.t_final = f.t_final;
  cfg.dt = f.dt;
  if (!f.x0_spec.empty()) cfg.x0 = parse_x0(f.x0_spec, g.node_count());
  Eigen::MatrixXd Q = parse_q(f.q_spec, g.edge_count());
  // alpha count depends on xi, which verify_graph computes; pre-expand only
  // explicit lists and let scalars default inside.
  std::vector<double> alpha_vals = parse_csv_doubles(f.alpha_spec, "--alpha");
  std::vector<double> alphas;
  if (alpha_vals.size() > 1 || alpha_vals[0] != 1.0) {
    es::Analysis probe = es::analyze_graph(g, tol);
    es::ZeroEigenstructure zes =
        es::zero_eigenstructure(probe.inc.Le, probe.inc.Es, tol);
    alphas = parse_alpha(f.alpha_spec, zes.xi);
  }
  es::VerifyOutcome out = es::verify_graph(g, cfg, tol, Q, alphas);
  std::cout << es::dump_json(es::verify_json(out));
  return out.pass ? 0 : 1;
}

struct RandomFlags {
  es::RandomGraphParams params;
  std::uint64_t seed = 1;
  std::string out;
};

int run_random(const RandomFlags& f) {
  es::SignedDigraph g = es::random_leader_graph(f.params, f.seed);
  std::string text = es::dump_json(es::graph_json(g));
  if (f.out.empty())
    std::cout << text;
  else
    es::write_text_file(f.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Structural analysis and simulation of first-order multi-agent "
      "systems over signed digraphs"};
  app.set_version_flag("--version", es::kToolVersion);
  app.require_subcommand(1);

  std::string analyze_path, analyze_out;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Validate a graph and report its structural predictions");
  analyze->add_option("graph", analyze_path, "Graph JSON file")->required();
  analyze->add_option("--out", analyze_out, "Write JSON here instead of stdout");

  SimFlags sim;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Integrate the node dynamics and write CSV/JSON artifacts");
  add_sim_flags(simulate, sim, true);
  simulate->add_option(
      "--out", sim.out,
      "Output prefix (default: graph file stem in the working directory)");

  SimFlags ver;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run every structural, spectral, Lyapunov and trajectory "
                "check; exit 0 only if all pass");
  add_sim_flags(verify, ver, false);

  RandomFlags rnd;
  CLI::App* random = app.add_subcommand(
      "random", "Generate a random graph with a prescribed leader structure");
  random->add_option("--n", rnd.params.n, "Node count")->capture_default_str();
  random->add_option("--roots", rnd.params.roots, "Root-node leader groups")
      ->capture_default_str();
  random->add_option("--sb-sccs", rnd.params.sb_sccs,
                     "Balanced leader cycles")
      ->capture_default_str();
  random->add_option("--sub-sccs", rnd.params.sub_sccs,
                     "Unbalanced leader cycles")
      ->capture_default_str();
  random->add_option("--scc-size", rnd.params.scc_size,
                     "Nodes per leader cycle")
      ->capture_default_str();
  random->add_option("--density", rnd.params.density,
                     "Probability of extra follower in-edges")
      ->capture_default_str();
  random->add_option("--neg-prob", rnd.params.neg_prob,
                     "Probability that an attachment edge is antagonistic")
      ->capture_default_str();
  random->add_flag("--sb", rnd.params.force_sb,
                   "Force the whole graph structurally balanced");
  random->add_option("--seed", rnd.seed, "RNG seed")->capture_default_str();
  random->add_option("--out", rnd.out, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) return run_analyze(analyze_path, analyze_out);
    if (simulate->parsed()) return run_simulate(sim);
    if (verify->parsed()) return run_verify(ver);
    if (random->parsed()) return run_random(rnd);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
