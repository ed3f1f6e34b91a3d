#include "edgesync/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edgesync {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::json vec_json(const Eigen::VectorXd& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    rows.push_back(vec_json(m.row(i).transpose()));
  return rows;
}

int require_int(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("graph JSON: ") + what +
                                " must be an integer");
  return j.get<int>();
}

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Root: return "root";
    case GroupKind::SccSB: return "sb-scc";
    case GroupKind::SccSUB: return "sub-scc";
  }
  return "?";
}

}  // namespace

SignedDigraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON parse error: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument(
        "graph JSON: expected an object with \"n\" and \"edges\"");
  SignedDigraph g;
  g.n = require_int(j["n"], "\"n\"");
  if (!j["edges"].is_array())
    throw std::invalid_argument("graph JSON: \"edges\" must be an array");
  for (const nlohmann::json& e : j["edges"]) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") ||
        !e.contains("sign"))
      throw std::invalid_argument(
          "graph JSON: each edge needs \"from\", \"to\" and \"sign\"");
    Edge edge;
    edge.tail = require_int(e["from"], "edge \"from\"");
    edge.head = require_int(e["to"], "edge \"to\"");
    edge.sign = require_int(e["sign"], "edge \"sign\"");
    g.edges.push_back(edge);
  }
  require_valid(g);
  return g;
}

SignedDigraph load_graph_file(const std::string& path) {
  return parse_graph_json(read_text_file(path));
}

nlohmann::json graph_json(const SignedDigraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges)
    edges.push_back({{"from", e.tail}, {"to", e.head}, {"sign", e.sign}});
  return {{"n", g.n}, {"edges", edges}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string trajectory_to_csv(const Trajectory& traj) {
  const int n = static_cast<int>(traj.X.cols());
  const int m = static_cast<int>(traj.E.cols());
  const bool with_v = !traj.V.empty();
  std::string out;
  out.reserve(64 + traj.times.size() * (n + 3 * m + 2) * 16);
  out += "t";
  for (int i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
  for (int k = 1; k <= m; ++k) out += ",e" + std::to_string(k);
  for (int k = 1; k <= m; ++k) out += ",ebar" + std::to_string(k);
  for (int k = 1; k <= m; ++k) out += ",em" + std::to_string(k);
  if (with_v) out += ",V";
  out += "\n";
  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    const Eigen::Index i = static_cast<Eigen::Index>(r);
    out += fmt(traj.times[r]);
    for (int c = 0; c < n; ++c) out += "," + fmt(traj.X(i, c));
    for (int c = 0; c < m; ++c) out += "," + fmt(traj.E(i, c));
    for (int c = 0; c < m; ++c) out += "," + fmt(traj.Ebar(i, c));
    for (int c = 0; c < m; ++c) out += "," + fmt(traj.Em(i, c));
    if (with_v) out += "," + fmt(traj.V[r]);
    out += "\n";
  }
  return out;
}

nlohmann::json analysis_json(const Analysis& a) {
  nlohmann::json groups = nlohmann::json::array();
  for (const LeaderGroup& grp : a.ls.groups)
    groups.push_back(
        {{"kind", kind_name(grp.kind)}, {"members", grp.members}});
  const SpectralReport& s = a.spectral;
  nlohmann::json spectral = {
      {"rank_es", s.rank_es},
      {"rank_es_in", s.rank_es_in},
      {"rank_ls", s.rank_ls},
      {"rank_le", s.rank_le},
      {"pred_rank_es", s.pred_rank_es},
      {"pred_rank_es_in", s.pred_rank_es_in},
      {"pred_rank_ls", s.pred_rank_ls},
      {"pred_rank_le", s.pred_rank_le},
      {"ranks_match", s.ranks_match},
      {"pred_gamma", s.pred_gamma},
      {"pred_xi", s.pred_xi},
      {"multiplicity_case", s.multiplicity_case},
      {"multiplicities_match", s.multiplicities_match},
      {"null_space_relation", to_string(s.ns_relation)},
      {"null_space_relation_predicted", to_string(s.ns_relation_predicted)},
      {"null_space_relation_match", s.ns_relation_match},
  };
  nlohmann::json j = {
      {"valid", true},
      {"n", a.inc.Es.rows()},
      {"m", a.inc.Es.cols()},
      {"sb", a.sb},
      {"spanning_tree", a.spanning_tree},
      {"l1", a.ls.l1},
      {"l2sb", a.ls.l2sb},
      {"l2sub", a.ls.l2sub},
      {"gamma", s.gamma},
      {"xi", s.xi},
      {"class", to_string(a.predicted_class)},
      {"behavior_case", a.behavior_case},
      {"groups", groups},
      {"followers", a.ls.followers},
      {"spectral", spectral},
      {"tolerance",
       {{"rank_rtol", s.tol.rank_rtol},
        {"eig_zero_tol", s.tol.eig_zero_tol},
        {"sim_tol", s.tol.sim_tol}}},
  };
  if (a.gauge.has_value()) j["gauge"] = a.gauge->d;
  return j;
}

nlohmann::json verdict_json(const BehaviorVerdict& v) {
  nlohmann::json checks = nlohmann::json::array();
  for (const BehaviorCheck& c : v.checks)
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"tol", c.tol},
                      {"pass", c.pass}});
  return {{"predicted", to_string(v.predicted)},
          {"case_index", v.case_index},
          {"checks", checks},
          {"overall_pass", v.overall_pass}};
}

nlohmann::json certificate_json(const LyapunovCertificate& cert,
                                bool include_p) {
  nlohmann::json j = {{"residual", cert.residual},
                      {"min_eig_p", cert.min_eig_P},
                      {"max_eig_p", cert.max_eig_P},
                      {"alphas", cert.alphas}};
  if (include_p) j["p"] = matrix_json(cert.P);
  return j;
}

nlohmann::json checks_json(const std::vector<CheckOutcome>& checks) {
  nlohmann::json a = nlohmann::json::array();
  for (const CheckOutcome& c : checks)
    a.push_back({{"name", c.name},
                 {"value", c.value},
                 {"bound", c.bound},
                 {"pass", c.pass}});
  return a;
}

nlohmann::json verify_json(const VerifyOutcome& out) {
  return {{"pass", out.pass},
          {"checks", checks_json(out.checks)},
          {"verdict", verdict_json(out.verdict)},
          {"analysis", analysis_json(out.analysis)}};
}

nlohmann::json summary_json(const Analysis& a, const Trajectory& traj,
                            const LyapunovCertificate& cert,
                            const BehaviorVerdict& verdict) {
  return {{"analysis", analysis_json(a)},
          {"certificate", certificate_json(cert)},
          {"verdict", verdict_json(verdict)},
          {"final",
           {{"t", traj.times.empty() ? 0.0 : traj.times.back()},
            {"ebar_max_norm", traj.final_diag.ebar_final_norm},
            {"e_final", vec_json(traj.final_diag.e_final)},
            {"predicted_e_limit", vec_json(traj.final_diag.predicted_e_limit)},
            {"limit_error", traj.final_diag.limit_error},
            {"edge_cross_check", traj.edge_cross_check},
            {"em_drift", edge_average_drift(traj)},
            {"stability_warning", traj.stability_warning}}}};
}

nlohmann::json manifest_json(const std::string& command,
                             const std::vector<std::string>& inputs,
                             const nlohmann::json& config,
                             const std::vector<std::string>& outputs) {
  return {{"command", command},
          {"tool_version", kToolVersion},
          {"inputs", inputs},
          {"config", config},
          {"outputs", outputs}};
}

}  // namespace edgesync
