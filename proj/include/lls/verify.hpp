#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lls/chain.hpp"
#include "lls/graph.hpp"
#include "lls/moves.hpp"

namespace lls {

enum class ChainPolicy {
  all_genus1,  // one chain per genus: g components of genus 1
  all_splits,  // additionally every arrangement with one genus-0 component
};

struct SweepBounds {
  int g_max = 4;
  int r_max = 2;
  int d_max = 6;
  ChainPolicy chain_policy = ChainPolicy::all_genus1;
  std::int64_t max_work = 0;  // 0: default_max_work()
};

// LLS_MAX_WORK from the environment, else 10^8 elementary sequence
// operations.
std::int64_t default_max_work();

// The chains a sweep degenerates a genus-g problem to.
std::vector<ChainConfig> chains_for(int g, ChainPolicy policy);

struct Violation {
  BNProblem problem;
  std::string check;
  std::string detail;
  std::string repro;  // one CLI command reproducing the instance
};

struct DisconnectedInstance {
  BNProblem problem;
  ChainConfig chain;
  int component_count;
};

struct SweepReport {
  std::string check;
  SweepBounds bounds;
  std::int64_t instances_checked = 0;
  std::vector<Violation> violations;
  std::vector<DisconnectedInstance> disconnected_rho_hat_zero;

  bool passed() const { return violations.empty(); }
};

// Enumeration nonempty <=> rho_hat >= 0, for every instance in range.
SweepReport verify_nonemptiness(const SweepBounds& bounds);

// Every instance with rho_hat >= 1 and nonempty enumeration has a
// connected component graph.
SweepReport verify_connectedness(const SweepBounds& bounds);

// rho_hat >= rho_hat_1 + rho_hat_2 for every split and complementary pair,
// with equality exactly under the two index conditions; both sides are
// computed independently.
SweepReport verify_subadditivity(const SweepBounds& bounds);

// Every enumerated component splits rho additively over the chain, and its
// node data is refined.
SweepReport verify_rho_additivity(const SweepBounds& bounds);

// For rho_hat = 0 instances with bump candidates: every connected component
// of the graph contains a vertex meeting the bumped locus.
SweepReport verify_bump(const SweepBounds& bounds);

// Move soundness on the (1, g-1) split: type-1 drops rho_1 by exactly 1
// keeping rho_hat_1 >= 0, type-2 lands in rho_hat_2 > 0, moves land on
// graph edges where the split is itself a chain, and for rho_hat >= 1 the
// move graph is connected with find_path succeeding for every vertex pair.
SweepReport verify_moves(const SweepBounds& bounds);

// enumerate_components agrees with the brute-force oracle, order included,
// on chains of total genus at most 3.
SweepReport verify_oracle_equivalence(const SweepBounds& bounds);

// All rho_hat = 0 instances with nonempty, disconnected component graphs.
std::vector<DisconnectedInstance> find_disconnected(const SweepBounds& bounds);

}  // namespace lls
