#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "edgesync/pipeline.hpp"

namespace edgesync {

// Graph documents: {"n": <int>, "edges": [{"from":i,"to":j,"sign":s}, ...]}.
// Edge order in the array is the edge order of the graph (and therefore the
// column order of every derived matrix).
SignedDigraph parse_graph_json(const std::string& text);
SignedDigraph load_graph_file(const std::string& path);
nlohmann::json graph_json(const SignedDigraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Serialized with two-space indentation, sorted keys and a trailing newline;
// identical values produce identical bytes.
std::string dump_json(const nlohmann::json& j);

// Header t,x1..xN,e1..eM,ebar1..ebarM,em1..emM[,V]; one row per recorded
// time, 12 significant digits, LF line endings.
std::string trajectory_to_csv(const Trajectory& traj);

nlohmann::json analysis_json(const Analysis& a);
nlohmann::json verdict_json(const BehaviorVerdict& v);
nlohmann::json certificate_json(const LyapunovCertificate& cert,
                                bool include_p = false);
nlohmann::json checks_json(const std::vector<CheckOutcome>& checks);
nlohmann::json verify_json(const VerifyOutcome& out);

// Summary written next to a simulation CSV: analysis, certificate scalars,
// behavior verdict and final-time diagnostics.
nlohmann::json summary_json(const Analysis& a, const Trajectory& traj,
                            const LyapunovCertificate& cert,
                            const BehaviorVerdict& verdict);

// Manifest describing one CLI run: the command, its inputs, the full echoed
// configuration and every output file written. Contains nothing volatile, so
// repeat runs produce identical bytes.
nlohmann::json manifest_json(const std::string& command,
                             const std::vector<std::string>& inputs,
                             const nlohmann::json& config,
                             const std::vector<std::string>& outputs);

}  // namespace edgesync
