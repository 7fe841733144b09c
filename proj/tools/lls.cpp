// Command-line front end: invariants of two-pointed linear series problems,
// component enumeration on chain degenerations, intersection graphs, move
// paths, and exhaustive verification sweeps.
//
// Exit codes: 0 success, 1 verification violation or mismatch, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lls/json_io.hpp"
#include "lls/verify.hpp"

namespace {

constexpr int kMaxDegree = 10'000;

struct ProblemFlags {
  int g = 0;
  int r = 0;
  int d = 0;
  std::vector<int> a;
  std::vector<int> b;

  void attach(CLI::App* cmd) {
    cmd->add_option("-g", g, "genus")->required();
    cmd->add_option("-r", r, "rank")->required();
    cmd->add_option("-d", d, "degree")->required();
    cmd->add_option("-a", a, "vanishing sequence at P, comma separated")
        ->required()
        ->delimiter(',');
    cmd->add_option("-b", b, "vanishing sequence at Q, comma separated")
        ->required()
        ->delimiter(',');
  }

  lls::BNProblem build() const {
    if (d > kMaxDegree) {
      throw std::invalid_argument("degree exceeds the CLI bound " +
                                  std::to_string(kMaxDegree));
    }
    if (static_cast<int>(a.size()) != r + 1) {
      throw std::invalid_argument("-a needs r+1 = " + std::to_string(r + 1) + " entries, got " +
                                  std::to_string(a.size()));
    }
    if (static_cast<int>(b.size()) != r + 1) {
      throw std::invalid_argument("-b needs r+1 = " + std::to_string(r + 1) + " entries, got " +
                                  std::to_string(b.size()));
    }
    return lls::BNProblem(g, lls::VanishingSequence(a, d), lls::VanishingSequence(b, d));
  }
};

lls::ChainConfig chain_or_default(const std::vector<int>& chain_flag, int g) {
  if (chain_flag.empty()) return lls::ChainConfig::all_genus1(g);
  return lls::ChainConfig(chain_flag);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << text;
}

int emit_report(const lls::SweepReport& report, bool as_json, const std::string& csv_path) {
  if (!csv_path.empty()) {
    write_text(csv_path, lls::report_to_csv(report));
  }
  if (as_json) {
    std::cout << lls::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << "check=" << report.check << " instances=" << report.instances_checked
              << " violations=" << report.violations.size() << ' '
              << (report.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& v : report.violations) {
      std::cout << "  violation: " << v.problem.to_string() << "\n    " << v.detail
                << "\n    repro: " << v.repro << '\n';
    }
  }
  return report.passed() ? 0 : 1;
}

int run_repro() {
  using lls::VanishingSequence;
  const lls::BNProblem p(2, VanishingSequence({0, 2, 3}, 6), VanishingSequence({0, 3, 5}, 6));
  const lls::ChainConfig chain({1, 1});
  int failures = 0;
  const auto fact = [&](bool ok, const std::string& text) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << text << '\n';
    if (!ok) ++failures;
  };

  std::cout << "repro instance: " << p.to_string() << " chain=" << chain.to_string() << '\n';

  fact(lls::rho(p) == 1 && lls::rho_hat(p) == 0, "rho = 1 and rho_hat = 0");

  const auto components = lls::enumerate_components(p, chain);
  const auto seq = [](std::vector<int> e) { return VanishingSequence(std::move(e), 6); };
  const std::vector<lls::Component> expected{{{seq({1, 3, 6})}},
                                             {{seq({1, 4, 5})}},
                                             {{seq({2, 3, 6})}},
                                             {{seq({2, 4, 5})}}};
  fact(components == expected,
       "4 components: b1 in {(1,3,6),(1,4,5),(2,3,6),(2,4,5)}");

  const lls::ComponentGraph gr = lls::build_graph(p, chain);
  const std::vector<std::pair<int, int>> expected_edges{{0, 2}, {1, 3}};
  fact(gr.vertices == expected && gr.edges == expected_edges,
       "exactly 2 edges: (1,3,6)--(2,3,6) and (1,4,5)--(2,4,5)");

  fact(gr.connected_component_count() == 2, "2 connected components");

  const auto bumps = lls::bump_candidates(p);
  const bool bump_ok =
      bumps.size() == 1 && bumps[0].first == 2 && bumps[0].second == seq({0, 2, 4});
  fact(bump_ok, "unique bump candidate: j0=2, a_bar=(0,2,4)");

  bool met_ok = bump_ok && !gr.vertices.empty();
  if (met_ok) {
    const std::vector<bool> expected_met{true, true, false, false};
    std::vector<bool> met;
    met.reserve(gr.vertices.size());
    for (const auto& c : gr.vertices) {
      met.push_back(lls::meets_bumped_locus(c, bumps[0].second, p, chain));
    }
    const auto labels = gr.partition();
    std::vector<bool> class_met(static_cast<std::size_t>(gr.connected_component_count()), false);
    for (std::size_t v = 0; v < met.size(); ++v) {
      if (met[v]) class_met[static_cast<std::size_t>(labels[v])] = true;
    }
    met_ok = met == expected_met &&
             std::all_of(class_met.begin(), class_met.end(), [](bool x) { return x; });
  }
  fact(met_ok, "bumped locus met exactly by (1,3,6),(1,4,5), touching both connected components");

  std::cout << (failures == 0 ? "PASS" : "FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and component graphs of two-pointed linear series on chains"};
  app.require_subcommand(1);

  // rho
  auto* cmd_rho = app.add_subcommand("rho", "print rho, rho_hat and the nonemptiness verdict");
  ProblemFlags rho_flags;
  rho_flags.attach(cmd_rho);
  bool rho_json = false;
  cmd_rho->add_flag("--json", rho_json, "machine readable output");

  // enumerate
  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list the components of the space on a chain");
  ProblemFlags enum_flags;
  enum_flags.attach(cmd_enumerate);
  std::vector<int> enum_chain;
  bool enum_json = false;
  bool enum_bruteforce = false;
  cmd_enumerate->add_option("--chain", enum_chain, "component genera, default all ones of length g")
      ->delimiter(',');
  cmd_enumerate->add_flag("--json", enum_json, "machine readable output");
  cmd_enumerate->add_flag("--bruteforce", enum_bruteforce, "use the brute-force oracle");

  // graph
  auto* cmd_graph = app.add_subcommand("graph", "build the intersection graph of components");
  ProblemFlags graph_flags;
  graph_flags.attach(cmd_graph);
  std::vector<int> graph_chain;
  bool graph_json = false;
  std::string graph_dot;
  cmd_graph->add_option("--chain", graph_chain, "component genera")->delimiter(',');
  cmd_graph->add_flag("--json", graph_json, "machine readable output");
  cmd_graph->add_option("--dot", graph_dot, "write DOT to the given file, '-' for stdout")
      ->expected(0, 1)->default_str("-");

  // components
  auto* cmd_components =
      app.add_subcommand("components", "print the number of connected components of the graph");
  ProblemFlags comp_flags;
  comp_flags.attach(cmd_components);
  std::vector<int> comp_chain;
  cmd_components->add_option("--chain", comp_chain, "component genera")->delimiter(',');

  // path
  auto* cmd_path = app.add_subcommand("path", "move-step certificate joining two node pairs");
  ProblemFlags path_flags;
  path_flags.attach(cmd_path);
  std::vector<int> path_split;
  std::vector<int> path_from;
  std::vector<int> path_to;
  bool path_json = false;
  cmd_path->add_option("--split", path_split, "genus split g1,g2 (default 1,g-1)")
      ->delimiter(',');
  cmd_path->add_option("--from", path_from, "b1 of the source pair")->required()->delimiter(',');
  cmd_path->add_option("--to", path_to, "b1 of the destination pair")->required()->delimiter(',');
  cmd_path->add_flag("--json", path_json, "machine readable output");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "run a verification sweep over a parameter box");
  std::string sweep_check = "all";
  lls::SweepBounds sweep_bounds;
  std::string sweep_policy = "genus1";
  bool sweep_json = false;
  std::string sweep_csv;
  cmd_sweep
      ->add_option("--check", sweep_check,
                   "nonemptiness|connectedness|subadditivity|rho-additivity|bump|moves|oracle|"
                   "disconnected|all")
      ->check(CLI::IsMember({"nonemptiness", "connectedness", "subadditivity", "rho-additivity",
                             "bump", "moves", "oracle", "disconnected", "all"}));
  cmd_sweep->add_option("--gmax", sweep_bounds.g_max, "max genus (default 4)");
  cmd_sweep->add_option("--rmax", sweep_bounds.r_max, "max rank (default 2)");
  cmd_sweep->add_option("--dmax", sweep_bounds.d_max, "max degree (default 6)");
  cmd_sweep->add_option("--chain-policy", sweep_policy, "genus1|splits")
      ->check(CLI::IsMember({"genus1", "splits"}));
  cmd_sweep->add_flag("--json", sweep_json, "machine readable output");
  cmd_sweep->add_option("--csv", sweep_csv, "also write a CSV report to the given file");

  // repro
  app.add_subcommand("repro",
                     "re-run the pinned reference instance and check its known facts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_rho->parsed()) {
      const lls::BNProblem p = rho_flags.build();
      const auto rho_value = lls::rho(p);
      const auto rho_hat_value = lls::rho_hat(p);
      const bool nonempty = lls::is_nonempty_general(p);
      if (rho_json) {
        std::cout << nlohmann::json{{"problem", lls::problem_to_json(p)},
                                    {"rho", rho_value},
                                    {"rho_hat", rho_hat_value},
                                    {"nonempty", nonempty}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "rho=" << rho_value << " rho_hat=" << rho_hat_value << " nonempty="
                  << (nonempty ? "true" : "false") << '\n';
      }
      return 0;
    }

    if (cmd_enumerate->parsed()) {
      const lls::BNProblem p = enum_flags.build();
      const lls::ChainConfig chain = chain_or_default(enum_chain, p.g);
      const auto components = enum_bruteforce
                                  ? lls::enumerate_components_bruteforce(p, chain)
                                  : lls::enumerate_components(p, chain);
      if (enum_json) {
        std::cout << lls::enumeration_to_json(p, chain, components).dump(2) << '\n';
      } else {
        std::cout << "components: " << components.size() << '\n';
        for (const auto& c : components) std::cout << "  " << lls::component_label(c) << '\n';
      }
      return 0;
    }

    if (cmd_graph->parsed()) {
      const lls::BNProblem p = graph_flags.build();
      const lls::ChainConfig chain = chain_or_default(graph_chain, p.g);
      const lls::ComponentGraph gr = lls::build_graph(p, chain);
      if (cmd_graph->count("--dot") > 0) {
        write_text(graph_dot, lls::graph_to_dot(gr));
      } else if (graph_json) {
        std::cout << lls::graph_to_json(gr).dump(2) << '\n';
      } else {
        std::cout << "vertices=" << gr.vertices.size() << " edges=" << gr.edges.size()
                  << " connected_components=" << gr.connected_component_count()
                  << " connected=" << (gr.is_connected() ? "true" : "false") << '\n';
        for (const auto& [i, j] : gr.edges) {
          std::cout << "  " << lls::component_label(gr.vertices[static_cast<std::size_t>(i)])
                    << " -- " << lls::component_label(gr.vertices[static_cast<std::size_t>(j)])
                    << '\n';
        }
      }
      return 0;
    }

    if (cmd_components->parsed()) {
      const lls::BNProblem p = comp_flags.build();
      const lls::ChainConfig chain = chain_or_default(comp_chain, p.g);
      std::cout << lls::build_graph(p, chain).connected_component_count() << '\n';
      return 0;
    }

    if (cmd_path->parsed()) {
      const lls::BNProblem p = path_flags.build();
      lls::Split split{1, p.g - 1};
      if (!path_split.empty()) {
        if (path_split.size() != 2) throw std::invalid_argument("--split needs g1,g2");
        split = {path_split[0], path_split[1]};
      } else if (p.g < 2) {
        split = {p.g, 0};
      }
      const lls::NodePair src(p, split, lls::VanishingSequence(path_from, p.d()));
      const lls::NodePair dst(p, split, lls::VanishingSequence(path_to, p.d()));
      try {
        const auto path = lls::find_path(src, dst, p);
        if (path_json) {
          std::cout << lls::path_to_json(p, split, path).dump(2) << '\n';
        } else {
          std::cout << "path length " << path.size() << '\n';
          for (std::size_t k = 0; k < path.size(); ++k) {
            const auto& ps = path[k];
            const auto& from = ps.forward ? ps.move.before : ps.move.after;
            const auto& to = ps.forward ? ps.move.after : ps.move.before;
            std::cout << "  step " << (k + 1) << ": "
                      << (ps.move.kind == lls::MoveKind::type1 ? "type1" : "type2")
                      << (ps.forward ? "" : " (inverse)") << " j0=" << ps.move.j0 << "  b1 "
                      << from.b1().to_string() << " -> " << to.b1().to_string() << '\n';
          }
        }
        return 0;
      } catch (const lls::MoveGraphDisconnected& e) {
        std::cerr << e.what() << '\n';
        return 1;
      }
    }

    if (cmd_sweep->parsed()) {
      sweep_bounds.chain_policy = sweep_policy == "splits" ? lls::ChainPolicy::all_splits
                                                           : lls::ChainPolicy::all_genus1;
      if (sweep_check == "disconnected") {
        const auto found = lls::find_disconnected(sweep_bounds);
        if (!sweep_csv.empty()) write_text(sweep_csv, lls::disconnected_to_csv(found));
        if (sweep_json) {
          std::cout << lls::disconnected_to_json(found).dump(2) << '\n';
        } else {
          std::cout << "disconnected rho_hat=0 instances: " << found.size() << '\n';
          for (const auto& inst : found) {
            std::cout << "  " << inst.problem.to_string() << " chain="
                      << inst.chain.to_string() << " components=" << inst.component_count
                      << '\n';
          }
        }
        return 0;
      }

      std::vector<lls::SweepReport> reports;
      const auto run = [&](const std::string& name) {
        if (name == "nonemptiness") return lls::verify_nonemptiness(sweep_bounds);
        if (name == "connectedness") return lls::verify_connectedness(sweep_bounds);
        if (name == "subadditivity") return lls::verify_subadditivity(sweep_bounds);
        if (name == "rho-additivity") return lls::verify_rho_additivity(sweep_bounds);
        if (name == "bump") return lls::verify_bump(sweep_bounds);
        if (name == "moves") return lls::verify_moves(sweep_bounds);
        return lls::verify_oracle_equivalence(sweep_bounds);
      };
      if (sweep_check == "all") {
        for (const char* name : {"nonemptiness", "connectedness", "subadditivity",
                                 "rho-additivity", "bump", "moves", "oracle"}) {
          reports.push_back(run(name));
        }
      } else {
        reports.push_back(run(sweep_check));
      }
      int rc = 0;
      for (std::size_t k = 0; k < reports.size(); ++k) {
        // With several reports the CSV flag applies to the last one only.
        const std::string csv = (k + 1 == reports.size()) ? sweep_csv : std::string{};
        rc |= emit_report(reports[k], sweep_json, csv);
      }
      return rc;
    }

    return run_repro();
  } catch (const lls::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
