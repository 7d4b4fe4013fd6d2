#include "oddsplit/multigraph.hpp"

#include <algorithm>

namespace oddsplit {

VertexSet::VertexSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Multigraph Multigraph::from_edge_list(int vertex_count,
                                      std::span<const std::pair<Vertex, Vertex>> pairs) {
  if (vertex_count < 0) {
    throw Error("vertex count must be non-negative");
  }
  Multigraph g;
  g.vertex_count_ = vertex_count;
  g.edges_.reserve(pairs.size());
  g.adjacency_.resize(static_cast<std::size_t>(vertex_count));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u < 0 || u >= vertex_count) {
      throw VertexOutOfRangeError(u, vertex_count);
    }
    if (v < 0 || v >= vertex_count) {
      throw VertexOutOfRangeError(v, vertex_count);
    }
    if (u == v) {
      throw LoopEdgeError(u, static_cast<int>(i));
    }
    const auto id = static_cast<EdgeId>(i);
    g.edges_.push_back(Edge{u, v});
    g.adjacency_[static_cast<std::size_t>(u)].push_back(IncidentEdge{id, v});
    g.adjacency_[static_cast<std::size_t>(v)].push_back(IncidentEdge{id, u});
  }
  return g;
}

Multigraph Multigraph::from_edge_list(int vertex_count,
                                      std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return from_edge_list(vertex_count, std::span(pairs.begin(), pairs.size()));
}

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count_) {
    throw VertexOutOfRangeError(v, vertex_count_);
  }
}

int Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

std::span<const IncidentEdge> Multigraph::incident_edges(Vertex v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

VertexSet odd_vertices(const Multigraph& g) {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 == 1) {
      odd.push_back(v);
    }
  }
  return VertexSet(std::move(odd));
}

VertexSet even_vertices(const Multigraph& g) {
  std::vector<Vertex> even;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 == 0) {
      even.push_back(v);
    }
  }
  return VertexSet(std::move(even));
}

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& u) {
  std::vector<Vertex> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> vertex_origin;
  vertex_origin.reserve(u.size());
  for (Vertex v : u) {
    g.check_vertex(v);
    new_id[static_cast<std::size_t>(v)] = static_cast<Vertex>(vertex_origin.size());
    vertex_origin.push_back(v);
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<EdgeId> edge_origin;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    Vertex nu = new_id[static_cast<std::size_t>(e.u)];
    Vertex nv = new_id[static_cast<std::size_t>(e.v)];
    if (nu >= 0 && nv >= 0) {
      pairs.emplace_back(nu, nv);
      edge_origin.push_back(id);
    }
  }

  InducedSubgraph result;
  result.graph = Multigraph::from_edge_list(static_cast<int>(vertex_origin.size()), pairs);
  result.edge_origin = std::move(edge_origin);
  result.vertex_origin = std::move(vertex_origin);
  return result;
}

std::vector<VertexSet> components(const Multigraph& g) {
  std::vector<VertexSet> result;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<Vertex> stack;
  // Scanning start vertices in ascending order yields components sorted by
  // their smallest member.
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) {
      continue;
    }
    std::vector<Vertex> member;
    stack.assign(1, start);
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      member.push_back(v);
      for (const IncidentEdge& inc : g.incident_edges(v)) {
        if (!seen[static_cast<std::size_t>(inc.other)]) {
          seen[static_cast<std::size_t>(inc.other)] = true;
          stack.push_back(inc.other);
        }
      }
    }
    result.emplace_back(std::move(member));
  }
  return result;
}

int edges_between(const Multigraph& g, const VertexSet& u1, const VertexSet& u2) {
  enum : std::uint8_t { kNone = 0, kFirst = 1, kSecond = 2 };
  std::vector<std::uint8_t> side(static_cast<std::size_t>(g.vertex_count()), kNone);
  for (Vertex v : u1) {
    g.check_vertex(v);
    side[static_cast<std::size_t>(v)] = kFirst;
  }
  for (Vertex v : u2) {
    g.check_vertex(v);
    if (side[static_cast<std::size_t>(v)] == kFirst) {
      throw OverlappingSetsError(v);
    }
    side[static_cast<std::size_t>(v)] = kSecond;
  }
  int count = 0;
  for (const Edge& e : g.edges()) {
    auto a = side[static_cast<std::size_t>(e.u)];
    auto b = side[static_cast<std::size_t>(e.v)];
    if ((a == kFirst && b == kSecond) || (a == kSecond && b == kFirst)) {
      ++count;
    }
  }
  return count;
}

ComponentClassification classify_components(const Multigraph& g) {
  ComponentClassification cc;
  auto odd = induced_subgraph(g, odd_vertices(g));
  for (const VertexSet& comp : components(odd.graph)) {
    std::vector<Vertex> original;
    original.reserve(comp.size());
    for (Vertex v : comp) {
      original.push_back(odd.vertex_origin[static_cast<std::size_t>(v)]);
    }
    cc.odd_components.emplace_back(std::move(original));
  }
  auto even = induced_subgraph(g, even_vertices(g));
  for (const VertexSet& comp : components(even.graph)) {
    std::vector<Vertex> original;
    original.reserve(comp.size());
    for (Vertex v : comp) {
      original.push_back(even.vertex_origin[static_cast<std::size_t>(v)]);
    }
    if (comp.size() % 2 == 1) {
      cc.even_odd_order.emplace_back(std::move(original));
    } else {
      cc.even_even_order.emplace_back(std::move(original));
    }
  }
  return cc;
}

}  // namespace oddsplit
