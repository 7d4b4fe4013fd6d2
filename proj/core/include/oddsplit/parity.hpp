#ifndef ODDSPLIT_PARITY_HPP
#define ODDSPLIT_PARITY_HPP

#include <optional>
#include <vector>

#include "oddsplit/multigraph.hpp"

namespace oddsplit {

/// A set of edge ids of a host multigraph, kept sorted and duplicate-free.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids);

  bool contains(EdgeId id) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<EdgeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

 private:
  std::vector<EdgeId> ids_;
};

/// Degree of v counting only the edges in the set.
int degree_in(const Multigraph& g, const EdgeSet& set, Vertex v);

/// Result of the spanning odd-subgraph construction. When no factor exists,
/// blocking_component names a component of odd order.
struct OddFactorResult {
  std::optional<EdgeSet> factor;
  VertexSet blocking_component;
  bool ok() const { return factor.has_value(); }
};

/// Spanning subgraph in which every vertex of g has odd degree. Exists iff
/// every component of g has even order. Built per component from a
/// breadth-first spanning tree rooted at the smallest vertex (edge-id
/// tie-breaking): a tree edge joins the factor iff deleting it splits the
/// tree into two odd-order parts. Non-tree edges are never used.
OddFactorResult odd_factor(const Multigraph& g);

/// Result of the T-join construction. When no join exists,
/// blocking_component names a component containing an odd number of
/// T-vertices.
struct TJoinResult {
  std::optional<EdgeSet> join;
  VertexSet blocking_component;
  bool ok() const { return join.has_value(); }
};

/// Edge set J such that a vertex has odd degree in J exactly when it lies in
/// target. Exists iff every component of g contains an even number of target
/// vertices. Equals the symmetric difference of spanning-tree paths between
/// consecutively paired target vertices (sorted order), computed per tree
/// edge from subtree parities.
TJoinResult t_join(const Multigraph& g, const VertexSet& target);

/// Breadth-first spanning forest: parent_edge[v] is the tree edge toward the
/// root of v's component, or -1 at roots. Roots are the smallest vertices of
/// their components; ties between equal-distance edges go to the smaller
/// edge id.
struct SpanningForest {
  std::vector<EdgeId> parent_edge;
  std::vector<Vertex> parent;
  std::vector<Vertex> bfs_order;  // every vertex, parents before children
};

SpanningForest spanning_forest(const Multigraph& g);

}  // namespace oddsplit

#endif  // ODDSPLIT_PARITY_HPP
