#include "lls/verify.hpp"

#include <cstdlib>
#include <sstream>

namespace lls {

namespace {

std::string seq_flag(const VanishingSequence& s) {
  std::ostringstream out;
  for (int j = 0; j <= s.rank(); ++j) {
    if (j) out << ',';
    out << s[j];
  }
  return out.str();
}

std::string chain_flag(const ChainConfig& cfg) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cfg.genera.size(); ++i) {
    if (i) out << ',';
    out << cfg.genera[i];
  }
  return out.str();
}

std::string repro_command(const BNProblem& p, const std::string& sub,
                          const std::string& extra = {}) {
  std::ostringstream out;
  out << "lls " << sub << " -g " << p.g << " -r " << p.r() << " -d " << p.d() << " -a "
      << seq_flag(p.a) << " -b " << seq_flag(p.b);
  if (!extra.empty()) out << ' ' << extra;
  return out.str();
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t value = 1;
  for (int i = 0; i < k; ++i) value = value * (n - i) / (i + 1);
  return value;
}

// Crude upper estimate of elementary sequence operations for one sweep,
// compared against the guard before any work starts.
void ensure_within_guard(const SweepBounds& bounds, int per_instance_factor) {
  const std::int64_t guard =
      bounds.max_work > 0 ? bounds.max_work : default_max_work();
  std::int64_t total = 0;
  for (int r = 0; r <= bounds.r_max; ++r) {
    for (int d = 0; d <= bounds.d_max; ++d) {
      const std::int64_t n = binom(d + 1, r + 1);
      const std::int64_t per_cell =
          n * n * n * (r + 1) * per_instance_factor * (bounds.g_max + 1);
      total += per_cell;
      if (total > guard) {
        throw GuardExceeded("sweep work estimate exceeds guard " + std::to_string(guard) +
                            "; shrink the bounds or raise LLS_MAX_WORK");
      }
    }
  }
}

template <typename F>
void for_each_problem(const SweepBounds& bounds, F&& f) {
  for (int g = 0; g <= bounds.g_max; ++g) {
    for (int r = 0; r <= bounds.r_max; ++r) {
      for (int d = 0; d <= bounds.d_max; ++d) {
        const auto pool = all_vanishing_sequences(r, d);
        for (const auto& a : pool) {
          for (const auto& b : pool) {
            f(BNProblem(g, a, b));
          }
        }
      }
    }
  }
}

}  // namespace

std::int64_t default_max_work() {
  if (const char* env = std::getenv("LLS_MAX_WORK")) {
    const long long parsed = std::atoll(env);
    if (parsed > 0) return parsed;
  }
  return 100'000'000;
}

std::vector<ChainConfig> chains_for(int g, ChainPolicy policy) {
  std::vector<ChainConfig> out{ChainConfig::all_genus1(g)};
  if (policy == ChainPolicy::all_splits && g >= 1) {
    // One genus-0 component inserted at each possible position.
    for (int pos = 0; pos <= g; ++pos) {
      std::vector<int> genera(static_cast<std::size_t>(g), 1);
      genera.insert(genera.begin() + pos, 0);
      out.emplace_back(std::move(genera));
    }
  }
  if (policy == ChainPolicy::all_splits && g == 0) {
    out.emplace_back(std::vector<int>{0, 0});
  }
  return out;
}

SweepReport verify_nonemptiness(const SweepBounds& bounds) {
  SweepReport report{"nonemptiness", bounds, 0, {}, {}};
  ensure_within_guard(bounds, 4);
  for_each_problem(bounds, [&](const BNProblem& p) {
    const bool criterion = rho_hat(p) >= 0;
    for (const ChainConfig& chain : chains_for(p.g, bounds.chain_policy)) {
      ++report.instances_checked;
      const bool nonempty = !enumerate_components(p, chain).empty();
      if (nonempty != criterion) {
        report.violations.push_back(
            {p, report.check,
             "rho_hat=" + std::to_string(rho_hat(p)) + " but enumeration on chain " +
                 chain.to_string() + (nonempty ? " is nonempty" : " is empty"),
             repro_command(p, "enumerate", "--chain " + chain_flag(chain))});
      }
    }
  });
  return report;
}

SweepReport verify_connectedness(const SweepBounds& bounds) {
  SweepReport report{"connectedness", bounds, 0, {}, {}};
  ensure_within_guard(bounds, 4);
  for_each_problem(bounds, [&](const BNProblem& p) {
    if (rho_hat(p) < 1) return;
    for (const ChainConfig& chain : chains_for(p.g, bounds.chain_policy)) {
      const ComponentGraph gr = build_graph(p, chain);
      if (gr.vertices.empty()) continue;  // a nonemptiness violation, not ours
      ++report.instances_checked;
      if (!gr.is_connected()) {
        report.violations.push_back(
            {p, report.check,
             "rho_hat=" + std::to_string(rho_hat(p)) + " yet the graph on chain " +
                 chain.to_string() + " has " +
                 std::to_string(gr.connected_component_count()) + " connected components",
             repro_command(p, "graph", "--chain " + chain_flag(chain))});
      }
    }
  });
  return report;
}

SweepReport verify_subadditivity(const SweepBounds& bounds) {
  SweepReport report{"subadditivity", bounds, 0, {}, {}};
  ensure_within_guard(bounds, 2);
  for_each_problem(bounds, [&](const BNProblem& p) {
    const std::int64_t rh = rho_hat(p);
    const int r = p.r();
    const int d = p.d();
    for (int g1 = 0; g1 <= p.g; ++g1) {
      const int g2 = p.g - g1;
      for (const VanishingSequence& b1 : all_vanishing_sequences(r, d)) {
        ++report.instances_checked;
        const VanishingSequence a2 = complement(b1);
        const std::int64_t rh1 = rho_hat(BNProblem(g1, p.a, b1));
        const std::int64_t rh2 = rho_hat(BNProblem(g2, a2, p.b));

        bool conditions = true;
        for (int j = 0; j <= r; ++j) {
          const int first_sum = p.a[j] + b1[r - j];
          const int second_sum = a2[j] + p.b[r - j];
          if (first_sum > d - g1 && second_sum < d - g2) conditions = false;
          if (second_sum > d - g2 && first_sum < d - g1) conditions = false;
        }

        const auto describe = [&] {
          return "split (" + std::to_string(g1) + "," + std::to_string(g2) + ") b1=" +
                 b1.to_string() + ": rho_hat=" + std::to_string(rh) + " rho_hat_1=" +
                 std::to_string(rh1) + " rho_hat_2=" + std::to_string(rh2);
        };
        if (rh < rh1 + rh2) {
          report.violations.push_back(
              {p, report.check, "inequality fails: " + describe(),
               repro_command(p, "rho")});
        } else if ((rh == rh1 + rh2) != conditions) {
          report.violations.push_back(
              {p, report.check,
               std::string("equality criterion mismatch (conditions ") +
                   (conditions ? "hold" : "fail") + "): " + describe(),
               repro_command(p, "rho")});
        }
      }
    }
  });
  return report;
}

SweepReport verify_rho_additivity(const SweepBounds& bounds) {
  SweepReport report{"rho-additivity", bounds, 0, {}, {}};
  ensure_within_guard(bounds, 4);
  for_each_problem(bounds, [&](const BNProblem& p) {
    for (const ChainConfig& chain : chains_for(p.g, bounds.chain_policy)) {
      for (const Component& c : enumerate_components(p, chain)) {
        ++report.instances_checked;
        if (!rho_additivity_check(c, chain, p)) {
          report.violations.push_back(
              {p, report.check,
               "local rho values do not sum to rho on chain " + chain.to_string(),
               repro_command(p, "enumerate", "--chain " + chain_flag(chain))});
        }
        if (!is_refined(c)) {
          report.violations.push_back(
              {p, report.check,
               "enumerated node data is not refined on chain " + chain.to_string(),
               repro_command(p, "enumerate", "--chain " + chain_flag(chain))});
        }
      }
    }
  });
  return report;
}

SweepReport verify_bump(const SweepBounds& bounds) {
  SweepReport report{"bump", bounds, 0, {}, {}};
  ensure_within_guard(bounds, 4);
  for_each_problem(bounds, [&](const BNProblem& p) {
    if (rho_hat(p) != 0) return;
    const auto candidates = bump_candidates(p);
    ++report.instances_checked;
    if (candidates.empty()) return;  // vacuous
    for (const ChainConfig& chain : chains_for(p.g, bounds.chain_policy)) {
      const ComponentGraph gr = build_graph(p, chain);
      if (gr.vertices.empty()) continue;
      const std::vector<int> labels = gr.partition();
      const int classes = gr.connected_component_count();
      for (const auto& [j0, a_bar] : candidates) {
        std::vector<bool> met(static_cast<std::size_t>(classes), false);
        for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
          if (meets_bumped_locus(gr.vertices[v], a_bar, p, chain)) {
            met[static_cast<std::size_t>(labels[v])] = true;
          }
        }
        for (int cls = 0; cls < classes; ++cls) {
          if (!met[static_cast<std::size_t>(cls)]) {
            report.violations.push_back(
                {p, report.check,
                 "connected component " + std::to_string(cls) + " on chain " +
                     chain.to_string() + " misses the locus bumped at j0=" +
                     std::to_string(j0) + " (a_bar=" + a_bar.to_string() + ")",
                 repro_command(p, "graph", "--chain " + chain_flag(chain))});
          }
        }
      }
    }
  });
  return report;
}

SweepReport verify_moves(const SweepBounds& bounds) {
  SweepReport report{"moves", bounds, 0, {}, {}};
  ensure_within_guard(bounds, 8);
  for_each_problem(bounds, [&](const BNProblem& p) {
    if (p.g < 2) return;
    const Split split{1, p.g - 1};
    const std::string split_flag =
        "--split " + std::to_string(split.g1) + "," + std::to_string(split.g2);
    std::vector<NodePair> pairs;
    try {
      pairs = valid_node_pairs(p, split);
    } catch (const std::logic_error& e) {
      report.violations.push_back({p, report.check, e.what(), repro_command(p, "rho")});
      return;
    }
    if (pairs.empty()) return;
    ++report.instances_checked;

    std::vector<MoveStep> steps;
    for (const NodePair& np : pairs) {
      const std::int64_t rho1_before = rho(np.first_problem(p));
      try {
        if (auto step = try_move_type1(np, p)) {
          const std::int64_t rho1_after = rho(step->after.first_problem(p));
          if (rho1_after != rho1_before - 1) {
            report.violations.push_back(
                {p, report.check,
                 "type-1 from b1=" + np.b1().to_string() + " moved rho_1 from " +
                     std::to_string(rho1_before) + " to " + std::to_string(rho1_after),
                 repro_command(p, "path", split_flag)});
          }
          steps.push_back(std::move(*step));
        }
        if (type2_preconditions_hold(np, p)) {
          if (auto step = try_move_type2(np, p)) {
            if (rho_hat(step->after.second_problem(p)) <= 0) {
              report.violations.push_back(
                  {p, report.check,
                   "type-2 from b1=" + np.b1().to_string() + " did not reach rho_hat_2 > 0",
                   repro_command(p, "path", split_flag)});
            }
            steps.push_back(std::move(*step));
          } else if (rho_hat(p) >= 1) {
            report.violations.push_back(
                {p, report.check,
                 "type-2 preconditions hold for b1=" + np.b1().to_string() +
                     " but no admissible index exists despite rho_hat >= 1",
                 repro_command(p, "path", split_flag)});
          }
        }
      } catch (const std::logic_error& e) {
        report.violations.push_back({p, report.check, e.what(),
                                     repro_command(p, "path", split_flag)});
      }
    }

    // Where the split is itself a chain, each move must land on an edge of
    // the component graph, and the two validity notions must agree.
    if (p.g == 2) {
      const ChainConfig chain({1, 1});
      const ComponentGraph gr = build_graph(p, chain);
      if (gr.vertices.size() != pairs.size()) {
        report.violations.push_back(
            {p, report.check,
             "valid pairs (" + std::to_string(pairs.size()) +
                 ") and graph vertices (" + std::to_string(gr.vertices.size()) +
                 ") disagree",
             repro_command(p, "graph", "--chain 1,1")});
      } else {
        const auto vertex_of = [&](const NodePair& np) -> int {
          for (std::size_t v = 0; v < gr.vertices.size(); ++v) {
            if (gr.vertices[v].node_b.front() == np.b1()) return static_cast<int>(v);
          }
          return -1;
        };
        for (const MoveStep& step : steps) {
          const int u = vertex_of(step.before);
          const int v = vertex_of(step.after);
          const bool edge =
              u >= 0 && v >= 0 &&
              std::find(gr.edges.begin(), gr.edges.end(),
                        std::make_pair(std::min(u, v), std::max(u, v))) != gr.edges.end();
          if (!edge) {
            report.violations.push_back(
                {p, report.check,
                 "move " + step.before.b1().to_string() + " -> " +
                     step.after.b1().to_string() + " is not a graph edge",
                 repro_command(p, "graph", "--chain 1,1")});
          }
        }
      }
    }

    // Connectivity of the move graph, and path search, when rho_hat >= 1.
    if (rho_hat(p) >= 1) {
      std::map<std::vector<int>, int> index;
      for (std::size_t v = 0; v < pairs.size(); ++v) {
        index.emplace(pairs[v].b1().entries(), static_cast<int>(v));
      }
      std::vector<std::vector<int>> adjacency(pairs.size());
      for (const MoveStep& step : steps) {
        const int u = index.at(step.before.b1().entries());
        const int v = index.at(step.after.b1().entries());
        adjacency[static_cast<std::size_t>(u)].push_back(v);
        adjacency[static_cast<std::size_t>(v)].push_back(u);
      }
      for (std::size_t src = 0; src < pairs.size(); ++src) {
        std::vector<bool> visited(pairs.size(), false);
        std::vector<int> stack{static_cast<int>(src)};
        visited[src] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
          const int u = stack.back();
          stack.pop_back();
          for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (!visited[static_cast<std::size_t>(v)]) {
              visited[static_cast<std::size_t>(v)] = true;
              ++reached;
              stack.push_back(v);
            }
          }
        }
        if (reached != pairs.size()) {
          report.violations.push_back(
              {p, report.check,
               "move graph disconnected from b1=" + pairs[src].b1().to_string() +
                   " despite rho_hat=" + std::to_string(rho_hat(p)),
               repro_command(p, "path", split_flag)});
          break;
        }
      }
      // Exercise the path machinery end to end on one vertex pair.
      if (pairs.size() >= 2 && report.violations.empty()) {
        try {
          const auto path = find_path(pairs.front(), pairs.back(), p);
          NodePair cursor = pairs.front();
          for (const PathStep& ps : path) {
            const NodePair& from = ps.forward ? ps.move.before : ps.move.after;
            const NodePair& to = ps.forward ? ps.move.after : ps.move.before;
            if (!(from == cursor)) {
              report.violations.push_back(
                  {p, report.check, "path steps do not chain",
                   repro_command(p, "path", split_flag)});
              break;
            }
            cursor = to;
          }
          if (!(cursor == pairs.back())) {
            report.violations.push_back(
                {p, report.check, "path does not end at its destination",
                 repro_command(p, "path", split_flag)});
          }
        } catch (const MoveGraphDisconnected& e) {
          report.violations.push_back(
              {p, report.check, e.what(), repro_command(p, "path", split_flag)});
        }
      }
    }
  });
  return report;
}

SweepReport verify_oracle_equivalence(const SweepBounds& bounds) {
  SweepReport report{"oracle-equivalence", bounds, 0, {}, {}};
  ensure_within_guard(bounds, 8);
  SweepBounds capped = bounds;
  capped.g_max = std::min(bounds.g_max, 3);
  for_each_problem(capped, [&](const BNProblem& p) {
    for (const ChainConfig& chain : chains_for(p.g, bounds.chain_policy)) {
      ++report.instances_checked;
      const auto fast = enumerate_components(p, chain);
      const auto oracle = enumerate_components_bruteforce(p, chain);
      if (fast != oracle) {
        report.violations.push_back(
            {p, report.check,
             "enumeration (" + std::to_string(fast.size()) + " components) and oracle (" +
                 std::to_string(oracle.size()) + ") disagree on chain " + chain.to_string(),
             repro_command(p, "enumerate", "--chain " + chain_flag(chain))});
      }
    }
  });
  return report;
}

std::vector<DisconnectedInstance> find_disconnected(const SweepBounds& bounds) {
  ensure_within_guard(bounds, 4);
  std::vector<DisconnectedInstance> out;
  for_each_problem(bounds, [&](const BNProblem& p) {
    if (rho_hat(p) != 0) return;
    for (const ChainConfig& chain : chains_for(p.g, bounds.chain_policy)) {
      const ComponentGraph gr = build_graph(p, chain);
      if (gr.vertices.empty()) continue;
      const int classes = gr.connected_component_count();
      if (classes >= 2) out.push_back({p, chain, classes});
    }
  });
  return out;
}

}  // namespace lls
