#ifndef ODDSPLIT_MULTIGRAPH_HPP
#define ODDSPLIT_MULTIGRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oddsplit/errors.hpp"

namespace oddsplit {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct IncidentEdge {
  EdgeId id;
  Vertex other;
};

/// A set of vertices of a host graph, kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> vertices);

  bool contains(Vertex v) const;
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  /// Smallest member; the set must be nonempty.
  Vertex min() const { return vertices_.front(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Loopless multigraph with dense edge ids 0..m-1. Parallel edges are
/// distinct edges. Immutable after construction; safe to share across
/// threads read-only.
class Multigraph {
 public:
  Multigraph() = default;

  /// Builds a multigraph from an ordered edge list; edge ids follow input
  /// order. Throws LoopEdgeError or VertexOutOfRangeError.
  static Multigraph from_edge_list(int vertex_count,
                                   std::span<const std::pair<Vertex, Vertex>> pairs);
  static Multigraph from_edge_list(
      int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Number of edge incidences at v; a parallel edge counts once per copy.
  int degree(Vertex v) const;

  std::span<const IncidentEdge> incident_edges(Vertex v) const;

  void check_vertex(Vertex v) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<IncidentEdge>> adjacency_;
};

/// Classification of the components of G into the three families that drive
/// the two-odd-subgraph criterion: components of the subgraph induced by the
/// odd-degree vertices, and components of the even-degree side split by
/// order parity.
struct ComponentClassification {
  std::vector<VertexSet> odd_components;    // components of <OddV(G)>
  std::vector<VertexSet> even_odd_order;    // components of <EvenV(G)>, odd order
  std::vector<VertexSet> even_even_order;   // components of <EvenV(G)>, even order
};

struct InducedSubgraph {
  Multigraph graph;
  std::vector<EdgeId> edge_origin;    // new edge id -> host edge id
  std::vector<Vertex> vertex_origin;  // new vertex id -> host vertex id
};

/// Vertices of odd degree.
VertexSet odd_vertices(const Multigraph& g);

/// Vertices of even degree (the complement of odd_vertices).
VertexSet even_vertices(const Multigraph& g);

/// Subgraph induced by the vertex set U, with vertices relabeled 0..|U|-1 in
/// ascending order of their original ids.
InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& u);

/// Connected components, ordered by smallest contained vertex.
std::vector<VertexSet> components(const Multigraph& g);

/// Number of edges with one endpoint in each set, counting multiplicity.
/// The sets must be disjoint.
int edges_between(const Multigraph& g, const VertexSet& u1, const VertexSet& u2);

ComponentClassification classify_components(const Multigraph& g);

}  // namespace oddsplit

#endif  // ODDSPLIT_MULTIGRAPH_HPP
