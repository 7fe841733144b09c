#include "lls/moves.hpp"

#include <deque>
#include <map>

namespace lls {

namespace {

// Bump b1 at entry r - j0 (equivalently drop a2 at entry j0) and rebuild
// the pair; the validating constructor rejects any move that would break
// an invariant.
NodePair bumped_pair(const NodePair& np, int j0, const BNProblem& p) {
  const int r = p.r();
  std::vector<int> entries = np.b1().entries();
  entries[static_cast<std::size_t>(r - j0)] += 1;
  return NodePair(p, np.split(), VanishingSequence(std::move(entries), p.d()));
}

}  // namespace

NodePair::NodePair(const BNProblem& p, Split split, VanishingSequence b1)
    : b1_(std::move(b1)), a2_(complement(b1_)), split_(split) {
  if (split_.g1 < 0 || split_.g2 < 0 || split_.g1 + split_.g2 != p.g) {
    throw std::invalid_argument("node pair: split (" + std::to_string(split_.g1) + "," +
                                std::to_string(split_.g2) + ") does not partition genus " +
                                std::to_string(p.g));
  }
  if (!b1_.same_context(p.a)) {
    throw std::invalid_argument("node pair: b1 context does not match the problem");
  }
  const std::int64_t rh1 = rho_hat(first_problem(p));
  const std::int64_t rh2 = rho_hat(second_problem(p));
  if (rh1 < 0 || rh2 < 0) {
    throw std::invalid_argument("node pair: b1=" + b1_.to_string() + " has rho_hat_1=" +
                                std::to_string(rh1) + ", rho_hat_2=" + std::to_string(rh2) +
                                "; both must be nonnegative");
  }
}

BNProblem NodePair::first_problem(const BNProblem& p) const {
  return BNProblem(split_.g1, p.a, b1_);
}

BNProblem NodePair::second_problem(const BNProblem& p) const {
  return BNProblem(split_.g2, a2_, p.b);
}

std::optional<MoveStep> try_move_type1(const NodePair& np, const BNProblem& p) {
  if (rho(np.first_problem(p)) <= 0) return std::nullopt;
  const int r = p.r();
  const int d = p.d();
  const VanishingSequence& b1 = np.b1();

  int j0 = 0;
  int min_sum = p.a[0] + b1[r];
  for (int j = 1; j <= r; ++j) {
    const int sum = p.a[j] + b1[r - j];
    if (sum < min_sum) {
      min_sum = sum;
      j0 = j;
    }
  }
  if (min_sum > d - 1) {
    // rho_1 > 0 forces some sum below d; reaching here would falsify the
    // selection argument.
    throw std::logic_error("type-1 move: minimal sum " + std::to_string(min_sum) +
                           " exceeds d-1 despite rho_1 > 0 (" + p.to_string() + ", b1=" +
                           b1.to_string() + ")");
  }
  return MoveStep{MoveKind::type1, j0, np, bumped_pair(np, j0, p)};
}

MoveStep move_type1(const NodePair& np, const BNProblem& p) {
  if (auto step = try_move_type1(np, p)) return *step;
  throw MoveUnavailable("type-1 move unavailable: rho_1 <= 0 for b1=" +
                        np.b1().to_string());
}

bool type2_preconditions_hold(const NodePair& np, const BNProblem& p) {
  if (rho_hat(np.second_problem(p)) != 0) return false;
  if (rho_hat(np.first_problem(p)) == 0) {
    const int r = p.r();
    const int d = p.d();
    for (int j = 0; j <= r; ++j) {
      if (p.a[j] + np.b1()[r - j] == d &&
          np.a2()[j] + p.b[r - j] < d - np.split().g2) {
        return false;
      }
    }
  }
  return true;
}

std::optional<MoveStep> try_move_type2(const NodePair& np, const BNProblem& p) {
  if (!type2_preconditions_hold(np, p)) return std::nullopt;
  const int r = p.r();
  const int d = p.d();
  const int g2 = np.split().g2;
  const VanishingSequence& b1 = np.b1();
  const VanishingSequence& a2 = np.a2();
  const bool rh1_zero = rho_hat(np.first_problem(p)) == 0;

  // Minimal index maximizing a2_j + b_{r-j}; when rho_hat_1 = 0 only
  // indices with a_j + b1_{r-j} strictly below d-1 qualify, otherwise
  // every index does (the sums are automatically at most d-1).
  int j0 = -1;
  int best = 0;
  for (int j = 0; j <= r; ++j) {
    const int first_sum = p.a[j] + b1[r - j];
    if (rh1_zero ? first_sum >= d - 1 : first_sum > d - 1) continue;
    const int second_sum = a2[j] + p.b[r - j];
    if (j0 < 0 || second_sum > best) {
      j0 = j;
      best = second_sum;
    }
  }
  if (j0 < 0 || best <= d - g2) return std::nullopt;

  if (j0 > 0 && a2[j0 - 1] >= a2[j0] - 1) {
    // The maximality of the selection is supposed to rule this out.
    throw std::logic_error("type-2 move: selected index " + std::to_string(j0) +
                           " cannot lower a2 (" + p.to_string() + ", b1=" +
                           b1.to_string() + ")");
  }

  MoveStep step{MoveKind::type2, j0, np, bumped_pair(np, j0, p)};
  if (rho_hat(step.after.second_problem(p)) <= 0) {
    throw std::logic_error("type-2 move: after-state fails rho_hat_2 > 0 (" +
                           p.to_string() + ", b1=" + b1.to_string() + ")");
  }
  return step;
}

MoveStep move_type2(const NodePair& np, const BNProblem& p) {
  if (auto step = try_move_type2(np, p)) return *step;
  throw MoveUnavailable("type-2 move unavailable for b1=" + np.b1().to_string());
}

std::vector<NodePair> valid_node_pairs(const BNProblem& p, Split split) {
  std::vector<NodePair> out;
  for (const VanishingSequence& b1 : all_vanishing_sequences(p.r(), p.d())) {
    const std::int64_t rh1 = rho_hat(BNProblem(split.g1, p.a, b1));
    if (rh1 < 0) continue;
    const std::int64_t rh2 = rho_hat(BNProblem(split.g2, complement(b1), p.b));
    if (rh2 < 0) continue;
    out.emplace_back(p, split, b1);
  }
  return out;
}

std::vector<MoveStep> all_moves(const BNProblem& p, Split split) {
  std::vector<MoveStep> out;
  for (const NodePair& np : valid_node_pairs(p, split)) {
    if (auto step = try_move_type1(np, p)) out.push_back(std::move(*step));
    if (auto step = try_move_type2(np, p)) out.push_back(std::move(*step));
  }
  return out;
}

std::vector<PathStep> find_path(const NodePair& src, const NodePair& dst,
                                const BNProblem& p) {
  if (src.split() != dst.split()) {
    throw std::invalid_argument("find_path: endpoints use different splits");
  }
  if (src == dst) return {};

  const std::vector<NodePair> vertices = valid_node_pairs(p, src.split());
  std::map<std::vector<int>, int> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    index.emplace(vertices[v].b1().entries(), static_cast<int>(v));
  }
  const auto locate = [&](const NodePair& np) {
    const auto it = index.find(np.b1().entries());
    if (it == index.end()) {
      throw std::invalid_argument("find_path: " + np.b1().to_string() +
                                  " is not a valid pair for this problem");
    }
    return it->second;
  };

  std::vector<std::vector<PathStep>> adjacency(vertices.size());
  const std::vector<MoveStep> moves = all_moves(p, src.split());
  std::vector<std::vector<int>> neighbors(vertices.size());
  for (const MoveStep& step : moves) {
    const int u = locate(step.before);
    const int v = locate(step.after);
    adjacency[static_cast<std::size_t>(u)].push_back({step, true});
    neighbors[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back({step, false});
    neighbors[static_cast<std::size_t>(v)].push_back(u);
  }

  const int start = locate(src);
  const int goal = locate(dst);
  std::vector<int> seen_via(vertices.size(), -1);  // index into adjacency lists
  std::vector<int> prev(vertices.size(), -1);
  std::deque<int> queue{start};
  std::vector<bool> visited(vertices.size(), false);
  visited[static_cast<std::size_t>(start)] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == goal) break;
    const auto& steps = adjacency[static_cast<std::size_t>(u)];
    const auto& nbrs = neighbors[static_cast<std::size_t>(u)];
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const int v = nbrs[k];
      if (visited[static_cast<std::size_t>(v)]) continue;
      visited[static_cast<std::size_t>(v)] = true;
      prev[static_cast<std::size_t>(v)] = u;
      seen_via[static_cast<std::size_t>(v)] = static_cast<int>(k);
      queue.push_back(v);
    }
  }
  if (!visited[static_cast<std::size_t>(goal)]) {
    throw MoveGraphDisconnected("move graph disconnected: no path from b1=" +
                                src.b1().to_string() + " to b1=" + dst.b1().to_string());
  }

  std::vector<PathStep> path;
  for (int v = goal; v != start; v = prev[static_cast<std::size_t>(v)]) {
    const int u = prev[static_cast<std::size_t>(v)];
    path.push_back(adjacency[static_cast<std::size_t>(u)]
                            [static_cast<std::size_t>(seen_via[static_cast<std::size_t>(v)])]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::pair<int, VanishingSequence>> bump_candidates(const BNProblem& p) {
  std::vector<std::pair<int, VanishingSequence>> out;
  if (rho_hat(p) != 0) return out;
  const int r = p.r();
  const int d = p.d();
  for (int j0 = 0; j0 <= r; ++j0) {
    const int bumped = p.a[j0] + 1;
    if (j0 == r ? bumped > d : bumped >= p.a[j0 + 1]) continue;
    std::vector<int> entries = p.a.entries();
    entries[static_cast<std::size_t>(j0)] = bumped;
    VanishingSequence a_bar(std::move(entries), d);
    if (rho_hat(BNProblem(p.g, a_bar, p.b)) == 0) {
      out.emplace_back(j0, std::move(a_bar));
    }
  }
  return out;
}

bool meets_bumped_locus(const Component& c, const VanishingSequence& a_bar,
                        const BNProblem& p, const ChainConfig& cfg) {
  for (int i = 1; i <= cfg.length(); ++i) {
    const BNProblem lp = local_problem(c, i, cfg, p);
    const VanishingSequence a_i = (i == 1) ? merge_max(lp.a, a_bar) : lp.a;
    if (!is_nonempty_component(cfg.genera[static_cast<std::size_t>(i - 1)], a_i, lp.b)) {
      return false;
    }
  }
  return true;
}

}  // namespace lls
