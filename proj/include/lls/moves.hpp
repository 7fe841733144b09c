#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lls/chain.hpp"
#include "lls/sequences.hpp"

namespace lls {

struct MoveUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MoveGraphDisconnected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Split {
  int g1;
  int g2;

  friend bool operator==(const Split&, const Split&) = default;
};

// Complementary pair (b^1, a^2) at the node of a two-component split
// g = g1 + g2, with both local rho_hat values nonnegative.  The local
// problems are (g1, r, d, a, b1) and (g2, r, d, a2, b).
class NodePair {
 public:
  NodePair(const BNProblem& p, Split split, VanishingSequence b1);

  const VanishingSequence& b1() const { return b1_; }
  const VanishingSequence& a2() const { return a2_; }
  Split split() const { return split_; }

  BNProblem first_problem(const BNProblem& p) const;
  BNProblem second_problem(const BNProblem& p) const;

  friend bool operator==(const NodePair&, const NodePair&) = default;

 private:
  VanishingSequence b1_;
  VanishingSequence a2_;
  Split split_;
};

enum class MoveKind { type1, type2 };

// A single move: one entry of b1 raised by 1, the facing entry of a2
// lowered by 1.
struct MoveStep {
  MoveKind kind;
  int j0;
  NodePair before;
  NodePair after;
};

// Type 1, available when rho_1 > 0: bump b1 at the facing index of the
// minimal a_j + b1_{r-j}.  Decreases rho_1 by exactly 1 and keeps
// rho_hat_1 >= 0.
std::optional<MoveStep> try_move_type1(const NodePair& np, const BNProblem& p);
MoveStep move_type1(const NodePair& np, const BNProblem& p);

// Type 2, available when rho_hat_2 = 0 (plus a side condition when
// rho_hat_1 = 0): bump b1 at an index chosen to push the after-state to
// rho_hat_2 > 0 while keeping rho_hat_1 >= 0.
std::optional<MoveStep> try_move_type2(const NodePair& np, const BNProblem& p);
MoveStep move_type2(const NodePair& np, const BNProblem& p);

// The stated preconditions of the type-2 move, separated from candidate
// selection so sweeps can distinguish "precondition fails" from "no
// admissible index exists".
bool type2_preconditions_hold(const NodePair& np, const BNProblem& p);

// All valid pairs for the split, in lexicographic order of b1.
std::vector<NodePair> valid_node_pairs(const BNProblem& p, Split split);

// Every move generated from every valid pair of the split.
std::vector<MoveStep> all_moves(const BNProblem& p, Split split);

struct PathStep {
  MoveStep move;
  bool forward;  // false: the move is traversed from after to before
};

// Breadth-first search over the undirected graph whose vertices are the
// valid pairs of the split and whose edges are type-1/type-2 moves.
// Empty path iff src == dst; throws MoveGraphDisconnected when dst is
// unreachable.
std::vector<PathStep> find_path(const NodePair& src, const NodePair& dst,
                                const BNProblem& p);

// All (j0, a-bar) where raising a_{j0} by 1 gives a valid sequence with
// rho_hat still 0.  Empty when rho_hat(p) != 0 (the bump is only defined
// there; callers wanting a diagnostic check rho_hat themselves).
std::vector<std::pair<int, VanishingSequence>> bump_candidates(const BNProblem& p);

// Whether the component stays nonempty on every chain component after
// merging a_bar into its first-component vanishing data.
bool meets_bumped_locus(const Component& c, const VanishingSequence& a_bar,
                        const BNProblem& p, const ChainConfig& cfg);

}  // namespace lls
