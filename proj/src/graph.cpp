#include "lls/graph.hpp"

#include "lls/union_find.hpp"

namespace lls {

bool components_intersect(const Component& c1, const Component& c2,
                          const ChainConfig& cfg, const BNProblem& p) {
  for (int i = 1; i <= cfg.length(); ++i) {
    const BNProblem lp1 = local_problem(c1, i, cfg, p);
    const BNProblem lp2 = local_problem(c2, i, cfg, p);
    if (!is_nonempty_component(cfg.genera[static_cast<std::size_t>(i - 1)],
                               merge_max(lp1.a, lp2.a), merge_max(lp1.b, lp2.b))) {
      return false;
    }
  }
  return true;
}

ComponentGraph build_graph(const BNProblem& p, const ChainConfig& cfg) {
  ComponentGraph gr{p, cfg, enumerate_components(p, cfg), {}};
  const int n = static_cast<int>(gr.vertices.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (components_intersect(gr.vertices[static_cast<std::size_t>(i)],
                               gr.vertices[static_cast<std::size_t>(j)], cfg, p)) {
        gr.edges.emplace_back(i, j);
      }
    }
  }
  return gr;
}

int ComponentGraph::connected_component_count() const {
  if (vertices.empty()) return 0;
  UnionFind uf(static_cast<int>(vertices.size()));
  for (const auto& [i, j] : edges) uf.unite(i, j);
  return uf.count();
}

std::vector<int> ComponentGraph::partition() const {
  UnionFind uf(static_cast<int>(vertices.size()));
  for (const auto& [i, j] : edges) uf.unite(i, j);
  std::vector<int> labels(vertices.size(), -1);
  std::vector<int> root_label(vertices.size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const int root = uf.find(static_cast<int>(v));
    if (root_label[static_cast<std::size_t>(root)] < 0) {
      root_label[static_cast<std::size_t>(root)] = next++;
    }
    labels[v] = root_label[static_cast<std::size_t>(root)];
  }
  return labels;
}

bool ComponentGraph::is_connected() const {
  return !vertices.empty() && connected_component_count() == 1;
}

}  // namespace lls
