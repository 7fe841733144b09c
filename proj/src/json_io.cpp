#include "lls/json_io.hpp"

#include <sstream>

namespace lls {

using nlohmann::json;

json sequence_to_json(const VanishingSequence& s) { return json(s.entries()); }

VanishingSequence sequence_from_json(const json& j, int d) {
  return VanishingSequence(j.get<std::vector<int>>(), d);
}

json problem_to_json(const BNProblem& p) {
  return json{{"g", p.g},
              {"r", p.r()},
              {"d", p.d()},
              {"a", sequence_to_json(p.a)},
              {"b", sequence_to_json(p.b)}};
}

BNProblem problem_from_json(const json& j) {
  const int d = j.at("d").get<int>();
  BNProblem p(j.at("g").get<int>(), sequence_from_json(j.at("a"), d),
              sequence_from_json(j.at("b"), d));
  if (j.at("r").get<int>() != p.r()) {
    throw std::invalid_argument("problem json: r does not match sequence length");
  }
  return p;
}

json chain_to_json(const ChainConfig& cfg) { return json(cfg.genera); }

ChainConfig chain_from_json(const json& j) {
  return ChainConfig(j.get<std::vector<int>>());
}

json component_to_json(const Component& c) {
  json node_b = json::array();
  for (const auto& b : c.node_b) node_b.push_back(sequence_to_json(b));
  return json{{"node_b", node_b}};
}

Component component_from_json(const json& j, int d) {
  Component c;
  for (const auto& entry : j.at("node_b")) {
    c.node_b.push_back(sequence_from_json(entry, d));
  }
  return c;
}

json enumeration_to_json(const BNProblem& p, const ChainConfig& cfg,
                         const std::vector<Component>& components) {
  json comps = json::array();
  for (const auto& c : components) comps.push_back(component_to_json(c));
  return json{{"problem", problem_to_json(p)},
              {"chain", chain_to_json(cfg)},
              {"components", comps}};
}

json graph_to_json(const ComponentGraph& gr) {
  json vertices = json::array();
  for (const auto& c : gr.vertices) vertices.push_back(component_to_json(c));
  json edges = json::array();
  for (const auto& [i, j] : gr.edges) edges.push_back(json::array({i, j}));
  return json{{"problem", problem_to_json(gr.problem)},
              {"chain", chain_to_json(gr.chain)},
              {"vertices", vertices},
              {"edges", edges},
              {"partition", gr.partition()},
              {"connected_components", gr.connected_component_count()},
              {"connected", gr.is_connected()}};
}

namespace {

json pair_to_json(const NodePair& np) {
  return json{{"b1", sequence_to_json(np.b1())}, {"a2", sequence_to_json(np.a2())}};
}

}  // namespace

json path_to_json(const BNProblem& p, Split split, const std::vector<PathStep>& path) {
  json steps = json::array();
  for (const PathStep& ps : path) {
    steps.push_back(json{{"kind", ps.move.kind == MoveKind::type1 ? "type1" : "type2"},
                         {"j0", ps.move.j0},
                         {"forward", ps.forward},
                         {"before", pair_to_json(ps.move.before)},
                         {"after", pair_to_json(ps.move.after)}});
  }
  return json{{"problem", problem_to_json(p)},
              {"split", json::array({split.g1, split.g2})},
              {"steps", steps}};
}

namespace {

json bounds_to_json(const SweepBounds& bounds) {
  return json{{"g_max", bounds.g_max},
              {"r_max", bounds.r_max},
              {"d_max", bounds.d_max},
              {"chain_policy",
               bounds.chain_policy == ChainPolicy::all_genus1 ? "genus1" : "splits"}};
}

json violation_to_json(const Violation& v) {
  return json{{"problem", problem_to_json(v.problem)},
              {"check", v.check},
              {"detail", v.detail},
              {"repro", v.repro}};
}

json disconnected_instance_to_json(const DisconnectedInstance& inst) {
  return json{{"problem", problem_to_json(inst.problem)},
              {"chain", chain_to_json(inst.chain)},
              {"component_count", inst.component_count}};
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_problem_fields(const BNProblem& p) {
  std::ostringstream out;
  out << p.g << ',' << p.r() << ',' << p.d() << ',' << csv_quote(p.a.to_string()) << ','
      << csv_quote(p.b.to_string());
  return out.str();
}

}  // namespace

json report_to_json(const SweepReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(violation_to_json(v));
  json disconnected = json::array();
  for (const auto& inst : report.disconnected_rho_hat_zero) {
    disconnected.push_back(disconnected_instance_to_json(inst));
  }
  return json{{"check", report.check},
              {"bounds", bounds_to_json(report.bounds)},
              {"instances_checked", report.instances_checked},
              {"violations", violations},
              {"disconnected_rho_hat_zero", disconnected},
              {"passed", report.passed()}};
}

json disconnected_to_json(const std::vector<DisconnectedInstance>& instances) {
  json out = json::array();
  for (const auto& inst : instances) out.push_back(disconnected_instance_to_json(inst));
  return out;
}

std::string report_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "record,check,g,r,d,a,b,detail\n";
  for (const auto& v : report.violations) {
    out << "violation," << v.check << ',' << csv_problem_fields(v.problem) << ','
        << csv_quote(v.detail + " | " + v.repro) << '\n';
  }
  for (const auto& inst : report.disconnected_rho_hat_zero) {
    out << "disconnected," << report.check << ',' << csv_problem_fields(inst.problem)
        << ','
        << csv_quote("chain=" + inst.chain.to_string() + " components=" +
                     std::to_string(inst.component_count))
        << '\n';
  }
  out << "summary," << report.check << ",,,,,,"
      << csv_quote("instances_checked=" + std::to_string(report.instances_checked) +
                   " violations=" + std::to_string(report.violations.size()))
      << '\n';
  return out.str();
}

std::string disconnected_to_csv(const std::vector<DisconnectedInstance>& instances) {
  std::ostringstream out;
  out << "record,check,g,r,d,a,b,detail\n";
  for (const auto& inst : instances) {
    out << "disconnected,disconnected," << csv_problem_fields(inst.problem) << ','
        << csv_quote("chain=" + inst.chain.to_string() + " components=" +
                     std::to_string(inst.component_count))
        << '\n';
  }
  return out.str();
}

std::string component_label(const Component& c) {
  if (c.node_b.empty()) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < c.node_b.size(); ++i) {
    if (i) out << '|';
    out << 'b' << (i + 1) << '=' << c.node_b[i].to_string();
  }
  return out.str();
}

std::string graph_to_dot(const ComponentGraph& gr) {
  std::ostringstream out;
  out << "graph components {\n";
  out << "  node [shape=box];\n";
  for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << component_label(gr.vertices[v]) << "\"];\n";
  }
  for (const auto& [i, j] : gr.edges) {
    out << "  v" << i << " -- v" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lls
