#include "oddsplit/decompose.hpp"

#include <cassert>
#include <functional>
#include <utility>
#include <vector>

#include "oddsplit/errors.hpp"

namespace oddsplit {

namespace {

VertexSet map_vertices(const VertexSet& set, const std::vector<Vertex>& origin) {
  std::vector<Vertex> mapped;
  mapped.reserve(set.size());
  for (Vertex v : set) {
    mapped.push_back(origin[static_cast<std::size_t>(v)]);
  }
  return VertexSet(mapped);
}

SubsetWitness map_witness(const SubsetWitness& witness, const std::vector<Vertex>& origin) {
  SubsetWitness mapped;
  for (const VertexSet& members : witness.y_members) {
    mapped.y_members.push_back(map_vertices(members, origin));
  }
  for (const VertexSet& members : witness.z_members) {
    mapped.z_members.push_back(map_vertices(members, origin));
  }
  return mapped;
}

}  // namespace

Normalized normalize(const Multigraph& g) {
  std::vector<Vertex> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> origin;
  std::vector<Vertex> stripped;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) {
      new_id[static_cast<std::size_t>(v)] = static_cast<Vertex>(origin.size());
      origin.push_back(v);
    } else {
      stripped.push_back(v);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    edges.push_back({new_id[static_cast<std::size_t>(edge.u)],
                     new_id[static_cast<std::size_t>(edge.v)]});
  }
  return Normalized{Multigraph::from_edge_list(static_cast<int>(origin.size()), edges),
                    std::move(origin), std::move(stripped)};
}

StarGraph build_gstar(const Multigraph& g, const ComponentClassification& cc, bool with_b) {
  const int x_count = static_cast<int>(cc.odd_components.size());
  std::vector<WTag> tags;
  tags.reserve(cc.even_odd_order.size() + cc.even_even_order.size());
  tags.insert(tags.end(), cc.even_odd_order.size(), WTag::Y);
  tags.insert(tags.end(), cc.even_even_order.size(), WTag::Z);
  StarGraph star(x_count, tags, with_b);

  std::vector<int> x_of(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> w_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < cc.odd_components.size(); ++i) {
    for (Vertex v : cc.odd_components[i]) {
      x_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  const int y_count = static_cast<int>(cc.even_odd_order.size());
  for (std::size_t i = 0; i < cc.even_odd_order.size(); ++i) {
    for (Vertex v : cc.even_odd_order[i]) {
      w_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < cc.even_even_order.size(); ++i) {
    for (Vertex v : cc.even_even_order[i]) {
      w_of[static_cast<std::size_t>(v)] = y_count + static_cast<int>(i);
    }
  }

  // Adjacency is the parity of the cross-edge count, so each crossing edge
  // toggles the bit. Edges inside one degree-parity side never cross
  // component boundaries.
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const int xu = x_of[static_cast<std::size_t>(edge.u)];
    const int xv = x_of[static_cast<std::size_t>(edge.v)];
    const int wu = w_of[static_cast<std::size_t>(edge.u)];
    const int wv = w_of[static_cast<std::size_t>(edge.v)];
    if (xu >= 0 && wv >= 0) {
      star.set_adjacent(xu, wv, !star.adjacent(xu, wv));
    } else if (xv >= 0 && wu >= 0) {
      star.set_adjacent(xv, wu, !star.adjacent(xv, wu));
    } else {
      assert((xu >= 0) == (xv >= 0));
    }
  }
  return star;
}

TwoOddPartitionResult two_odd_partition(const Multigraph& g, Solver solver) {
  const ComponentClassification cc = classify_components(g);
  const StarGraph star = build_gstar(g, cc, /*with_b=*/true);
  const int x_count = star.x_count();

  std::optional<std::vector<bool>> assignment;
  if (solver == Solver::Graph) {
    GraphElimination elim = graph_eliminate(star);
    if (elim.feasible) {
      assignment = std::move(elim.assignment);
    }
  } else {
    Gf2Outcome outcome = solve(star.to_system());
    if (outcome.consistent()) {
      std::vector<bool> bits(static_cast<std::size_t>(x_count));
      for (int i = 0; i < x_count; ++i) {
        bits[static_cast<std::size_t>(i)] = outcome.solution->test(static_cast<std::size_t>(i));
      }
      assignment = std::move(bits);
    }
  }

  TwoOddPartitionResult result;
  if (!assignment) {
    // Witness extraction needs the row provenance that only the matrix
    // elimination keeps; both solvers agree on feasibility.
    Gf2Outcome outcome = solve(star.to_system());
    if (outcome.consistent()) {
      throw Error("internal: solver feasibility disagreement");
    }
    const int y_count = static_cast<int>(cc.even_odd_order.size());
    for (int row = 0; row < star.w_count(); ++row) {
      if (!outcome.certificate.test(static_cast<std::size_t>(row))) {
        continue;
      }
      if (row < y_count) {
        result.witness.y_members.push_back(cc.even_odd_order[static_cast<std::size_t>(row)]);
      } else {
        result.witness.z_members.push_back(
            cc.even_even_order[static_cast<std::size_t>(row - y_count)]);
      }
    }
    return result;
  }

  RBPartition part;
  std::vector<Vertex> r_all;
  std::vector<Vertex> b_all;
  for (int i = 0; i < x_count; ++i) {
    const VertexSet& comp = cc.odd_components[static_cast<std::size_t>(i)];
    if ((*assignment)[static_cast<std::size_t>(i)]) {
      part.r_components.push_back(comp);
      r_all.insert(r_all.end(), comp.begin(), comp.end());
    } else {
      part.b_components.push_back(comp);
      b_all.insert(b_all.end(), comp.begin(), comp.end());
    }
  }
  part.r_vertices = VertexSet(r_all);
  part.b_vertices = VertexSet(b_all);
  result.partition = std::move(part);
  return result;
}

TwoOddResult decompose_two_odd(const Multigraph& g, Solver solver) {
  const Normalized norm = normalize(g);
  const Multigraph& h = norm.graph;

  TwoOddPartitionResult part = two_odd_partition(h, solver);
  TwoOddResult result;
  result.stripped = norm.stripped;
  if (!part.ok()) {
    result.witness = map_witness(part.witness, norm.vertex_origin);
    return result;
  }

  // 0 = red family, 1 = blue family, 2 = even-degree side.
  std::vector<int> side(static_cast<std::size_t>(h.vertex_count()), 2);
  for (Vertex v : part.partition->r_vertices) {
    side[static_cast<std::size_t>(v)] = 0;
  }
  for (Vertex v : part.partition->b_vertices) {
    side[static_cast<std::size_t>(v)] = 1;
  }

  std::vector<EdgeId> red_ids;
  std::vector<EdgeId> blue_ids;
  std::vector<int> red_degree(static_cast<std::size_t>(h.vertex_count()), 0);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const Edge& edge = h.edge(e);
    const int su = side[static_cast<std::size_t>(edge.u)];
    const int sv = side[static_cast<std::size_t>(edge.v)];
    assert(!(su == 0 && sv == 1) && !(su == 1 && sv == 0));
    if (su == 0 || sv == 0) {
      red_ids.push_back(e);
      ++red_degree[static_cast<std::size_t>(edge.u)];
      ++red_degree[static_cast<std::size_t>(edge.v)];
    } else if (su == 1 || sv == 1) {
      blue_ids.push_back(e);
    }
  }

  // Inside the even-degree side every vertex still needs odd degree in one
  // class and even in the other. Vertices whose red degree is even so far
  // are exactly the ones a red join must hit; their count is even in every
  // component because the partition controls the cross-edge parities.
  const VertexSet evenv = even_vertices(h);
  const InducedSubgraph sub = induced_subgraph(h, evenv);
  std::vector<Vertex> targets;
  for (std::size_t i = 0; i < sub.vertex_origin.size(); ++i) {
    if (red_degree[static_cast<std::size_t>(sub.vertex_origin[i])] % 2 == 0) {
      targets.push_back(static_cast<Vertex>(i));
    }
  }
  TJoinResult tj = t_join(sub.graph, VertexSet(targets));
  if (!tj.ok()) {
    throw Error("internal: parity repair join missing");
  }
  for (EdgeId f = 0; f < sub.graph.edge_count(); ++f) {
    if (tj.join->contains(f)) {
      red_ids.push_back(sub.edge_origin[static_cast<std::size_t>(f)]);
    } else {
      blue_ids.push_back(sub.edge_origin[static_cast<std::size_t>(f)]);
    }
  }

  TwoColoring coloring{EdgeSet(red_ids), EdgeSet(blue_ids)};
  if (h.edge_count() > 0 && !coloring.red.contains(0)) {
    std::swap(coloring.red, coloring.blue);
  }
  result.coloring = std::move(coloring);
  return result;
}

EvenOddResult decompose_even_odd(const Multigraph& g) {
  const Normalized norm = normalize(g);
  const Multigraph& h = norm.graph;

  const VertexSet ov = odd_vertices(h);
  const InducedSubgraph sub = induced_subgraph(h, ov);
  OddFactorResult factor = odd_factor(sub.graph);

  EvenOddResult result;
  result.stripped = norm.stripped;
  if (!factor.ok()) {
    result.blocking_component =
        map_vertices(map_vertices(factor.blocking_component, sub.vertex_origin),
                     norm.vertex_origin);
    return result;
  }

  std::vector<EdgeId> odd_ids;
  for (EdgeId f : *factor.factor) {
    odd_ids.push_back(sub.edge_origin[static_cast<std::size_t>(f)]);
  }
  EdgeSet odd(odd_ids);
  std::vector<EdgeId> even_ids;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (!odd.contains(e)) {
      even_ids.push_back(e);
    }
  }
  result.classes = EvenOddDecomposition{EdgeSet(even_ids), std::move(odd)};
  return result;
}

TwoEvenResult decompose_two_even(const Multigraph& g) {
  const Normalized norm = normalize(g);
  const Multigraph& h = norm.graph;

  TwoEvenResult result;
  result.stripped = norm.stripped;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) % 2 != 0) {
      result.odd_degree_vertex = norm.vertex_origin[static_cast<std::size_t>(v)];
      return result;
    }
  }
  std::vector<EdgeId> all;
  all.reserve(static_cast<std::size_t>(h.edge_count()));
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    all.push_back(e);
  }
  result.classes = {EdgeSet(all), EdgeSet()};
  return result;
}

std::optional<SubsetWitness> check_ns_condition(const Multigraph& g, int cap) {
  const Normalized norm = normalize(g);
  const ComponentClassification cc = classify_components(norm.graph);
  const StarGraph star = build_gstar(norm.graph, cc, /*with_b=*/false);

  const int members = star.w_count();
  if (members > cap) {
    throw TooManyComponentsError(members, cap);
  }
  const int x_count = star.x_count();
  const int y_count = static_cast<int>(cc.even_odd_order.size());

  // Depth-first over subfamilies in lexicographic member order, including a
  // member before skipping it, with incrementally maintained incidence
  // parities per odd-side component.
  std::vector<char> x_parity(static_cast<std::size_t>(x_count), 0);
  int x_odd = 0;
  int y_chosen = 0;
  std::vector<int> chosen;
  std::optional<SubsetWitness> found;

  auto toggle = [&](int w) {
    for (int x = 0; x < x_count; ++x) {
      if (star.adjacent(x, w)) {
        x_parity[static_cast<std::size_t>(x)] ^= 1;
        x_odd += x_parity[static_cast<std::size_t>(x)] ? 1 : -1;
      }
    }
  };

  std::function<bool(int)> visit = [&](int start) -> bool {
    if (y_chosen % 2 == 1 && x_odd == 0) {
      SubsetWitness witness;
      for (int w : chosen) {
        if (w < y_count) {
          witness.y_members.push_back(cc.even_odd_order[static_cast<std::size_t>(w)]);
        } else {
          witness.z_members.push_back(
              cc.even_even_order[static_cast<std::size_t>(w - y_count)]);
        }
      }
      found = map_witness(witness, norm.vertex_origin);
      return true;
    }
    for (int w = start; w < members; ++w) {
      chosen.push_back(w);
      toggle(w);
      if (w < y_count) {
        ++y_chosen;
      }
      if (visit(w + 1)) {
        return true;
      }
      if (w < y_count) {
        --y_chosen;
      }
      toggle(w);
      chosen.pop_back();
    }
    return false;
  };
  visit(0);
  return found;
}

}  // namespace oddsplit
