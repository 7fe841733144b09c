#include "lls/chain.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace lls {

namespace {

void require_compatible(const BNProblem& p, const ChainConfig& cfg) {
  if (cfg.total_genus() != p.g) {
    throw std::invalid_argument("chain " + cfg.to_string() + " has total genus " +
                                std::to_string(cfg.total_genus()) +
                                ", problem has genus " + std::to_string(p.g));
  }
}

bool component_tuple_valid(const Component& c, const ChainConfig& cfg,
                           const BNProblem& p) {
  for (int i = 1; i <= cfg.length(); ++i) {
    const BNProblem lp = local_problem(c, i, cfg, p);
    if (!is_nonempty_component(cfg.genera[static_cast<std::size_t>(i - 1)], lp.a, lp.b)) {
      return false;
    }
  }
  return true;
}

}  // namespace

ChainConfig::ChainConfig(std::vector<int> genera_in) : genera(std::move(genera_in)) {
  if (genera.empty()) {
    throw std::invalid_argument("chain: needs at least one component");
  }
  for (int gi : genera) {
    if (gi != 0 && gi != 1) {
      throw std::invalid_argument("chain: component genus must be 0 or 1, got " +
                                  std::to_string(gi));
    }
  }
}

int ChainConfig::total_genus() const {
  return std::accumulate(genera.begin(), genera.end(), 0);
}

std::string ChainConfig::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < genera.size(); ++i) {
    if (i) out << ',';
    out << genera[i];
  }
  out << ')';
  return out.str();
}

ChainConfig ChainConfig::all_genus1(int g) {
  if (g < 0) throw std::invalid_argument("chain: negative genus");
  if (g == 0) return ChainConfig({0});
  return ChainConfig(std::vector<int>(static_cast<std::size_t>(g), 1));
}

BNProblem local_problem(const Component& c, int i, const ChainConfig& cfg,
                        const BNProblem& p) {
  require_compatible(p, cfg);
  const int n = cfg.length();
  if (i < 1 || i > n) {
    throw std::invalid_argument("local_problem: component index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
  }
  if (static_cast<int>(c.node_b.size()) != n - 1) {
    throw std::invalid_argument("local_problem: component has " +
                                std::to_string(c.node_b.size()) + " node sequences, chain needs " +
                                std::to_string(n - 1));
  }
  VanishingSequence a_i =
      (i == 1) ? p.a : complement(c.node_b[static_cast<std::size_t>(i - 2)]);
  VanishingSequence b_i = (i == n) ? p.b : c.node_b[static_cast<std::size_t>(i - 1)];
  return BNProblem(cfg.genera[static_cast<std::size_t>(i - 1)], std::move(a_i),
                   std::move(b_i));
}

std::vector<Component> enumerate_components(const BNProblem& p, const ChainConfig& cfg) {
  require_compatible(p, cfg);
  const int n = cfg.length();
  if (n == 1) {
    if (is_nonempty_component(cfg.genera[0], p.a, p.b)) return {Component{{}}};
    return {};
  }

  const std::vector<VanishingSequence> pool = all_vanishing_sequences(p.r(), p.d());

  // Suffix lists keyed on (component index, incoming a^i): the choices of
  // b^i..b^{n-1} completing a partial tuple are independent of how the
  // prefix arrived at a^i.
  using Suffixes = std::vector<std::vector<VanishingSequence>>;
  std::map<std::pair<int, std::vector<int>>, Suffixes> memo;

  auto solve = [&](auto&& self, int i, const VanishingSequence& a_i) -> const Suffixes& {
    const auto key = std::make_pair(i, a_i.entries());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Suffixes result;
    if (i == n) {
      if (is_nonempty_component(cfg.genera[static_cast<std::size_t>(i - 1)], a_i, p.b)) {
        result.push_back({});
      }
    } else {
      for (const VanishingSequence& b_i : pool) {
        if (!is_nonempty_component(cfg.genera[static_cast<std::size_t>(i - 1)], a_i, b_i)) {
          continue;
        }
        for (const auto& tail : self(self, i + 1, complement(b_i))) {
          std::vector<VanishingSequence> tuple;
          tuple.reserve(tail.size() + 1);
          tuple.push_back(b_i);
          tuple.insert(tuple.end(), tail.begin(), tail.end());
          result.push_back(std::move(tuple));
        }
      }
    }
    return memo.emplace(key, std::move(result)).first->second;
  };

  std::vector<Component> out;
  for (const auto& tuple : solve(solve, 1, p.a)) {
    out.push_back(Component{tuple});
  }
  return out;
}

std::vector<Component> enumerate_components_bruteforce(const BNProblem& p,
                                                       const ChainConfig& cfg,
                                                       std::int64_t max_combinations) {
  require_compatible(p, cfg);
  const int n = cfg.length();
  const std::vector<VanishingSequence> pool = all_vanishing_sequences(p.r(), p.d());
  const int nodes = n - 1;

  std::int64_t combos = 1;
  for (int i = 0; i < nodes; ++i) {
    if (combos > max_combinations / std::max<std::int64_t>(1, pool.size())) {
      combos = max_combinations + 1;
      break;
    }
    combos *= static_cast<std::int64_t>(pool.size());
  }
  if (combos > max_combinations) {
    throw GuardExceeded("too large for oracle: " + std::to_string(pool.size()) + "^" +
                        std::to_string(nodes) + " candidate tuples exceed guard " +
                        std::to_string(max_combinations));
  }

  std::vector<Component> out;
  if (nodes == 0) {
    Component c{{}};
    if (component_tuple_valid(c, cfg, p)) out.push_back(std::move(c));
    return out;
  }
  if (pool.empty()) return out;

  std::vector<std::size_t> idx(static_cast<std::size_t>(nodes), 0);
  for (;;) {
    Component c;
    c.node_b.reserve(static_cast<std::size_t>(nodes));
    for (std::size_t k = 0; k < idx.size(); ++k) c.node_b.push_back(pool[idx[k]]);
    if (component_tuple_valid(c, cfg, p)) out.push_back(std::move(c));

    int k = nodes - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] + 1 == pool.size()) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < nodes; ++t) idx[static_cast<std::size_t>(t)] = 0;
  }
  return out;
}

NodeDataReport check_node_data(const std::vector<VanishingSequence>& a_seqs,
                               const std::vector<VanishingSequence>& b_seqs) {
  if (a_seqs.size() != b_seqs.size() || a_seqs.empty()) {
    throw std::invalid_argument("check_node_data: need matching nonempty a/b lists");
  }
  const int d = a_seqs.front().degree();
  const int r = a_seqs.front().rank();
  for (const auto& s : a_seqs) {
    if (s.degree() != d || s.rank() != r) {
      throw std::invalid_argument("check_node_data: context mismatch in a sequences");
    }
  }
  for (const auto& s : b_seqs) {
    if (s.degree() != d || s.rank() != r) {
      throw std::invalid_argument("check_node_data: context mismatch in b sequences");
    }
  }

  NodeDataReport report{true, true};
  for (std::size_t i = 0; i + 1 < a_seqs.size(); ++i) {
    const VanishingSequence& b_i = b_seqs[i];
    const VanishingSequence& a_next = a_seqs[i + 1];
    for (int j = 0; j <= r; ++j) {
      const int sum = b_i[j] + a_next[r - j];
      if (sum < d) report.satisfies_node_inequality = false;
      if (sum != d) report.refined = false;
    }
  }
  if (!report.satisfies_node_inequality) report.refined = false;
  return report;
}

bool is_refined(const Component& c) {
  if (c.node_b.empty()) return true;
  std::vector<VanishingSequence> a_seqs;
  std::vector<VanishingSequence> b_seqs;
  const int d = c.node_b.front().degree();
  const int r = c.node_b.front().rank();
  // Endpoint data does not enter the node inequality; pad with the
  // unramified sequence to form full per-component tuples.
  a_seqs.push_back(unramified_sequence(r, d));
  for (const auto& b : c.node_b) {
    b_seqs.push_back(b);
    a_seqs.push_back(complement(b));
  }
  b_seqs.push_back(unramified_sequence(r, d));
  return check_node_data(a_seqs, b_seqs).refined;
}

bool rho_additivity_check(const Component& c, const ChainConfig& cfg,
                          const BNProblem& p) {
  std::int64_t total = 0;
  for (int i = 1; i <= cfg.length(); ++i) {
    total += rho(local_problem(c, i, cfg, p));
  }
  return total == rho(p);
}

}  // namespace lls
