#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lls/nonemptiness.hpp"
#include "lls/sequences.hpp"

namespace lls {

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chain of smooth components Z_1,...,Z_n glued in a path (Q_i to P_{i+1}),
// each component of genus 0 or 1.  The genera must sum to the genus of the
// problem the chain degenerates.
struct ChainConfig {
  explicit ChainConfig(std::vector<int> genera);

  std::vector<int> genera;

  int length() const { return static_cast<int>(genera.size()); }
  int total_genus() const;
  std::string to_string() const;  // "(1,1)"

  // g components of genus 1; a single genus-0 component when g = 0.
  static ChainConfig all_genus1(int g);

  friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

// One irreducible component of the space of limit linear series on a chain,
// indexed by the vanishing sequences chosen at the n-1 nodes: node_b[i-1] is
// b^i, the vanishing at Q_i on Z_i.  The facing a^{i+1} is its complement.
struct Component {
  std::vector<VanishingSequence> node_b;

  friend bool operator==(const Component&, const Component&) = default;
  friend bool operator<(const Component& x, const Component& y) {
    return x.node_b < y.node_b;
  }
};

// Restriction of (p, c) to the i-th chain component, 1-based: the problem
// (g_i, r, d, a^i, b^i) with a^1 = p.a, b^n = p.b and the node data in
// between.  rho/rho_hat of the result are the local invariants.
BNProblem local_problem(const Component& c, int i, const ChainConfig& cfg,
                        const BNProblem& p);

// All node tuples whose every local problem is nonempty, in lexicographic
// order on the concatenated node sequences.  Left-to-right sweep with the
// suffix lists memoized on the incoming sequence at each node.
std::vector<Component> enumerate_components(const BNProblem& p, const ChainConfig& cfg);

// Independent oracle: filters the full Cartesian product of candidate node
// sequences.  Throws GuardExceeded when the product size exceeds
// max_combinations.
std::vector<Component> enumerate_components_bruteforce(
    const BNProblem& p, const ChainConfig& cfg,
    std::int64_t max_combinations = 10'000'000);

struct NodeDataReport {
  bool satisfies_node_inequality;  // b^i_j + a^{i+1}_{r-j} >= d at every node
  bool refined;                    // equality everywhere
};

// Validates externally supplied per-component vanishing data a^1..a^n,
// b^1..b^n against the node inequality.
NodeDataReport check_node_data(const std::vector<VanishingSequence>& a_seqs,
                               const std::vector<VanishingSequence>& b_seqs);

// Components as enumerated store exactly complementary node data, so this
// always holds; it recomputes the fact instead of asserting it.
bool is_refined(const Component& c);

// sum_i rho(local_problem(c, i)) == rho(p).
bool rho_additivity_check(const Component& c, const ChainConfig& cfg,
                          const BNProblem& p);

}  // namespace lls
