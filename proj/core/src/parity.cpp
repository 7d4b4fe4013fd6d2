#include "oddsplit/parity.hpp"

#include <algorithm>
#include <deque>

namespace oddsplit {

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSet::contains(EdgeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  std::vector<EdgeId> out;
  std::set_symmetric_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                                std::back_inserter(out));
  EdgeSet result;
  result.ids_ = std::move(out);
  return result;
}

int degree_in(const Multigraph& g, const EdgeSet& set, Vertex v) {
  g.check_vertex(v);
  int deg = 0;
  for (const IncidentEdge& inc : g.incident_edges(v)) {
    if (set.contains(inc.id)) {
      ++deg;
    }
  }
  return deg;
}

SpanningForest spanning_forest(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  SpanningForest forest;
  forest.parent_edge.assign(n, -1);
  forest.parent.assign(n, -1);
  forest.bfs_order.reserve(n);

  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) {
      continue;
    }
    seen[static_cast<std::size_t>(root)] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      forest.bfs_order.push_back(v);
      // Adjacency lists are in edge-id order, so equally deep candidates are
      // claimed by the smallest edge id.
      for (const IncidentEdge& inc : g.incident_edges(v)) {
        if (!seen[static_cast<std::size_t>(inc.other)]) {
          seen[static_cast<std::size_t>(inc.other)] = true;
          forest.parent_edge[static_cast<std::size_t>(inc.other)] = inc.id;
          forest.parent[static_cast<std::size_t>(inc.other)] = v;
          queue.push_back(inc.other);
        }
      }
    }
  }
  return forest;
}

OddFactorResult odd_factor(const Multigraph& g) {
  for (const VertexSet& comp : components(g)) {
    if (comp.size() % 2 == 1) {
      return OddFactorResult{std::nullopt, comp};
    }
  }

  SpanningForest forest = spanning_forest(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  // Removing a tree edge leaves the subtree below it and the rest of its
  // even-order component, so both parts are odd iff the subtree is.
  std::vector<int> subtree_size(n, 1);
  std::vector<EdgeId> picked;
  for (auto it = forest.bfs_order.rbegin(); it != forest.bfs_order.rend(); ++it) {
    Vertex v = *it;
    Vertex p = forest.parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      subtree_size[static_cast<std::size_t>(p)] += subtree_size[static_cast<std::size_t>(v)];
      if (subtree_size[static_cast<std::size_t>(v)] % 2 == 1) {
        picked.push_back(forest.parent_edge[static_cast<std::size_t>(v)]);
      }
    }
  }
  return OddFactorResult{EdgeSet(std::move(picked)), VertexSet{}};
}

TJoinResult t_join(const Multigraph& g, const VertexSet& target) {
  std::vector<bool> in_target(static_cast<std::size_t>(g.vertex_count()), false);
  for (Vertex v : target) {
    g.check_vertex(v);
    in_target[static_cast<std::size_t>(v)] = true;
  }

  for (const VertexSet& comp : components(g)) {
    int count = 0;
    for (Vertex v : comp) {
      count += in_target[static_cast<std::size_t>(v)] ? 1 : 0;
    }
    if (count % 2 == 1) {
      return TJoinResult{std::nullopt, comp};
    }
  }

  // A tree edge lies on an odd number of the pairing paths exactly when its
  // subtree holds an odd number of target vertices, independent of how the
  // target vertices were paired up.
  SpanningForest forest = spanning_forest(g);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> subtree_targets(n, 0);
  std::vector<EdgeId> picked;
  for (auto it = forest.bfs_order.rbegin(); it != forest.bfs_order.rend(); ++it) {
    Vertex v = *it;
    if (in_target[static_cast<std::size_t>(v)]) {
      ++subtree_targets[static_cast<std::size_t>(v)];
    }
    Vertex p = forest.parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      subtree_targets[static_cast<std::size_t>(p)] += subtree_targets[static_cast<std::size_t>(v)];
      if (subtree_targets[static_cast<std::size_t>(v)] % 2 == 1) {
        picked.push_back(forest.parent_edge[static_cast<std::size_t>(v)]);
      }
    }
  }
  return TJoinResult{EdgeSet(std::move(picked)), VertexSet{}};
}

}  // namespace oddsplit
