#ifndef ODDSPLIT_DECOMPOSE_HPP
#define ODDSPLIT_DECOMPOSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "oddsplit/gf2.hpp"
#include "oddsplit/multigraph.hpp"
#include "oddsplit/parity.hpp"

namespace oddsplit {

/// Partition of the edge ids into a red and a blue class.
struct TwoColoring {
  EdgeSet red;
  EdgeSet blue;
};

/// Split of the odd-degree-side components into the red family and the blue
/// family, together with the vertex unions of both.
struct RBPartition {
  std::vector<VertexSet> r_components;
  std::vector<VertexSet> b_components;
  VertexSet r_vertices;
  VertexSet b_vertices;
};

/// Infeasibility witness: a subfamily of the even-side components with an
/// odd number of odd-order members such that no odd-side component has
/// neighbors in an odd number of its members.
struct SubsetWitness {
  std::vector<VertexSet> y_members;
  std::vector<VertexSet> z_members;
};

struct Normalized {
  Multigraph graph;
  std::vector<Vertex> vertex_origin;  // new vertex id -> original id
  std::vector<Vertex> stripped;       // removed isolated vertices, original ids
};

/// Removes degree-0 vertices. Edges survive unchanged and keep their ids.
Normalized normalize(const Multigraph& g);

/// Bipartite component graph of g: x-side from the odd-degree components,
/// w-side from the even-degree components tagged by order parity, adjacency
/// wherever the cross-edge count is odd. With with_b, the constant node is
/// attached to every Y-tagged node.
StarGraph build_gstar(const Multigraph& g, const ComponentClassification& cc, bool with_b);

enum class Solver { Matrix, Graph };

struct TwoOddPartitionResult {
  std::optional<RBPartition> partition;
  SubsetWitness witness;  // meaningful iff no partition
  bool ok() const { return partition.has_value(); }
};

/// Decides two-odd decomposability of a normalized graph by solving the
/// component-interconnection system over GF(2): one variable per odd-side
/// component, one equation per even-side component (right-hand side 1 for
/// odd order, 0 for even order). A solution picks the red family; an
/// inconsistency certificate translates into a SubsetWitness.
///
/// The caller is expected to strip isolated vertices first; an isolated
/// vertex forms an odd-order even-side component with no neighbors and makes
/// the system infeasible.
TwoOddPartitionResult two_odd_partition(const Multigraph& g, Solver solver = Solver::Matrix);

struct TwoOddResult {
  std::optional<TwoColoring> coloring;
  SubsetWitness witness;  // meaningful iff no coloring, original vertex ids
  std::vector<Vertex> stripped;
  bool ok() const { return coloring.has_value(); }
};

/// Full two-odd decomposition: normalizes, partitions the odd-side
/// components, colors all edges touching them, then fixes up the even-side
/// subgraph with a T-join on the vertices whose red degree is still even.
/// The class containing the lowest edge id is returned as red.
TwoOddResult decompose_two_odd(const Multigraph& g, Solver solver = Solver::Matrix);

struct EvenOddDecomposition {
  EdgeSet even;
  EdgeSet odd;
};

struct EvenOddResult {
  std::optional<EvenOddDecomposition> classes;
  VertexSet blocking_component;  // odd-order component of the odd-degree side
  std::vector<Vertex> stripped;
  bool ok() const { return classes.has_value(); }
};

/// Even + odd decomposition: the odd class is a spanning odd subgraph of the
/// odd-degree side, everything else is even. Exists iff every component of
/// the odd-degree side has even order.
EvenOddResult decompose_even_odd(const Multigraph& g);

struct TwoEvenResult {
  std::optional<std::pair<EdgeSet, EdgeSet>> classes;
  Vertex odd_degree_vertex = -1;  // meaningful iff no classes
  std::vector<Vertex> stripped;
  bool ok() const { return classes.has_value(); }
};

/// Two even subgraphs exist iff every degree is even; the whole edge set and
/// the empty set then do.
TwoEvenResult decompose_two_even(const Multigraph& g);

/// Exhaustively checks the subset condition: every subfamily of the
/// even-side components with an odd number of odd-order members must leave
/// some odd-side component with neighbors in an odd number of its members.
/// Returns the lexicographically first violating subfamily, or nullopt when
/// the condition holds. Isolated vertices are stripped first. Throws
/// TooManyComponentsError when the even side exceeds the cap.
std::optional<SubsetWitness> check_ns_condition(const Multigraph& g, int cap = 20);

}  // namespace oddsplit

#endif  // ODDSPLIT_DECOMPOSE_HPP
