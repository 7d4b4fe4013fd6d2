#include "oddsplit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>
#include <utility>

#include "oddsplit/errors.hpp"

namespace oddsplit {

namespace {

/// Unbiased draw from [0, k): values above the largest multiple of k are
/// rejected and redrawn. std::uniform_int_distribution is not pinned down
/// by the standard, so reproducibility needs a hand-rolled reduction.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % k + 1) % k;  // 2^64 mod k
  if (rem == 0) {
    return rng() % k;
  }
  std::uint64_t r = rng();
  while (r > max - rem) {
    r = rng();
  }
  return r % k;
}

}  // namespace

VerifyReport verify_decomposition(const Multigraph& g, const TwoColoring& coloring, Mode mode) {
  const int m = g.edge_count();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  auto claim = [&](const EdgeSet& cls) {
    for (EdgeId e : cls) {
      if (e < 0 || e >= m) {
        throw NotAPartitionError("class names unknown edge id " + std::to_string(e));
      }
      if (seen[static_cast<std::size_t>(e)]) {
        throw NotAPartitionError("edge " + std::to_string(e) + " appears in both classes");
      }
      seen[static_cast<std::size_t>(e)] = 1;
    }
  };
  claim(coloring.red);
  claim(coloring.blue);
  if (static_cast<int>(coloring.red.size() + coloring.blue.size()) != m) {
    throw NotAPartitionError("classes cover " +
                             std::to_string(coloring.red.size() + coloring.blue.size()) +
                             " of " + std::to_string(m) + " edges");
  }

  std::vector<int> red_degree(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> blue_degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : coloring.red) {
    const Edge& edge = g.edge(e);
    ++red_degree[static_cast<std::size_t>(edge.u)];
    ++red_degree[static_cast<std::size_t>(edge.v)];
  }
  for (EdgeId e : coloring.blue) {
    const Edge& edge = g.edge(e);
    ++blue_degree[static_cast<std::size_t>(edge.u)];
    ++blue_degree[static_cast<std::size_t>(edge.v)];
  }

  const bool want_odd_1 = mode == Mode::TwoOdd;
  const bool want_odd_2 = mode != Mode::TwoEven;
  VerifyReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int rd = red_degree[static_cast<std::size_t>(v)];
    const int bd = blue_degree[static_cast<std::size_t>(v)];
    if (rd > 0 && (rd % 2 == 1) != want_odd_1) {
      report.violations.push_back({v, 1, rd});
    }
    if (bd > 0 && (bd % 2 == 1) != want_odd_2) {
      report.violations.push_back({v, 2, bd});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::optional<TwoColoring> brute_force(const Multigraph& g, Mode mode, int cap) {
  const int m = g.edge_count();
  if (m > cap) {
    throw TooManyEdgesError(m, cap);
  }
  if (m >= 63) {
    throw TooManyEdgesError(m, 62);
  }
  const int n = g.vertex_count();
  std::vector<std::uint64_t> incidence(static_cast<std::size_t>(n), 0);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    incidence[static_cast<std::size_t>(edge.u)] |= std::uint64_t{1} << e;
    incidence[static_cast<std::size_t>(edge.v)] |= std::uint64_t{1} << e;
  }

  const unsigned want_odd_1 = mode == Mode::TwoOdd ? 1u : 0u;
  const unsigned want_odd_2 = mode != Mode::TwoEven ? 1u : 0u;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool valid = true;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t red = incidence[static_cast<std::size_t>(v)] & ~mask;
      const std::uint64_t blue = incidence[static_cast<std::size_t>(v)] & mask;
      if ((red != 0 && (std::popcount(red) & 1u) != want_odd_1) ||
          (blue != 0 && (std::popcount(blue) & 1u) != want_odd_2)) {
        valid = false;
        break;
      }
    }
    if (!valid) {
      continue;
    }
    std::vector<EdgeId> red_ids;
    std::vector<EdgeId> blue_ids;
    for (EdgeId e = 0; e < m; ++e) {
      if ((mask >> e) & 1u) {
        blue_ids.push_back(e);
      } else {
        red_ids.push_back(e);
      }
    }
    return TwoColoring{EdgeSet(red_ids), EdgeSet(blue_ids)};
  }
  return std::nullopt;
}

Multigraph generate(const GenSpec& spec) {
  if (spec.n < 0 || spec.m < 0 || spec.max_multiplicity < 1) {
    throw InfeasibleSpecError("n and m must be nonnegative and max multiplicity at least 1");
  }
  if (spec.forest) {
    if (spec.m > std::max(0, spec.n - 1)) {
      throw InfeasibleSpecError("a forest on " + std::to_string(spec.n) +
                                " vertices has at most " +
                                std::to_string(std::max(0, spec.n - 1)) + " edges");
    }
  } else {
    const long long pairs = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
    if (static_cast<long long>(spec.m) >
        static_cast<long long>(spec.max_multiplicity) * pairs) {
      throw InfeasibleSpecError(std::to_string(spec.m) + " loopless edges do not fit on " +
                                std::to_string(spec.n) + " vertices with multiplicity " +
                                std::to_string(spec.max_multiplicity));
    }
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(spec.m));

  if (spec.forest) {
    std::vector<Vertex> perm(static_cast<std::size_t>(spec.n));
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[draw_below(rng, i)]);
    }
    // The full permutation would grow a spanning tree; realizing only a
    // random m-subset of the attachment steps leaves a forest.
    std::vector<int> steps(static_cast<std::size_t>(std::max(0, spec.n - 1)));
    std::iota(steps.begin(), steps.end(), 1);
    for (int t = 0; t < spec.m; ++t) {
      const std::size_t pick =
          static_cast<std::size_t>(t) +
          draw_below(rng, steps.size() - static_cast<std::size_t>(t));
      std::swap(steps[static_cast<std::size_t>(t)], steps[pick]);
    }
    steps.resize(static_cast<std::size_t>(spec.m));
    std::sort(steps.begin(), steps.end());
    for (int i : steps) {
      const std::size_t j =
          static_cast<std::size_t>(draw_below(rng, static_cast<std::uint64_t>(i)));
      edges.push_back({perm[static_cast<std::size_t>(i)], perm[j]});
    }
  } else {
    std::unordered_map<std::uint64_t, int> multiplicity;
    while (static_cast<int>(edges.size()) < spec.m) {
      const Vertex u =
          static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(spec.n)));
      const Vertex v =
          static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(spec.n)));
      if (u == v) {
        continue;
      }
      const std::uint64_t key =
          static_cast<std::uint64_t>(std::min(u, v)) * static_cast<std::uint64_t>(spec.n) +
          static_cast<std::uint64_t>(std::max(u, v));
      int& count = multiplicity[key];
      if (count >= spec.max_multiplicity) {
        continue;
      }
      ++count;
      edges.push_back({u, v});
    }
  }
  return Multigraph::from_edge_list(spec.n, edges);
}

}  // namespace oddsplit
