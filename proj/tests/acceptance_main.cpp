// Acceptance gate: eight end-to-end criteria, one summary line each.
// The binary exits with the number of failed criteria, so a zero exit
// status means the library meets its contract.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "oddsplit/decompose.hpp"
#include "oddsplit/errors.hpp"
#include "oddsplit/gf2.hpp"
#include "oddsplit/multigraph.hpp"
#include "oddsplit/oracle.hpp"
#include "test_util.hpp"

using namespace oddsplit;

namespace {

// Pinned budgets. Wall-clock limits are generous on purpose: the point is
// to catch accidental exponential blowups, not scheduler jitter.
constexpr double kExhaustiveSecondsLimit = 300.0;
constexpr double kRandomSecondsLimit = 600.0;
constexpr double kScalingSecondsLimit = 10.0;
constexpr int kExhaustiveMaxN = 5;
constexpr int kExhaustiveMaxEdges = 8;
constexpr int kExhaustiveMaxMult = 2;
constexpr int kRandomInstances = 10000;
constexpr int kForestInstances = 1000;
constexpr int kSolverInstances = 1000;
constexpr int kBruteCrossCheckEdges = 16;
constexpr int kScalingN = 10000;
constexpr int kScalingM = 50000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// True when the witness names real even-side components, an odd number of
/// them of odd order, and every odd-side component has an even number of
/// members joined to it by an odd edge count.
bool witness_holds(const Multigraph& g, const SubsetWitness& witness) {
  const ComponentClassification cc = classify_components(g);
  if (witness.y_members.size() % 2 != 1) {
    return false;
  }
  auto member_of = [](const std::vector<VertexSet>& family, const VertexSet& set) {
    for (const VertexSet& comp : family) {
      if (comp == set) {
        return true;
      }
    }
    return false;
  };
  for (const VertexSet& members : witness.y_members) {
    if (!member_of(cc.even_odd_order, members)) {
      return false;
    }
  }
  for (const VertexSet& members : witness.z_members) {
    if (!member_of(cc.even_even_order, members)) {
      return false;
    }
  }
  for (const VertexSet& x : cc.odd_components) {
    int odd_counts = 0;
    for (const VertexSet& members : witness.y_members) {
      odd_counts += edges_between(g, x, members) % 2;
    }
    for (const VertexSet& members : witness.z_members) {
      odd_counts += edges_between(g, x, members) % 2;
    }
    if (odd_counts % 2 != 0) {
      return false;
    }
  }
  return true;
}

bool blocking_component_holds(const Multigraph& g, const VertexSet& blocking) {
  const InducedSubgraph sub = induced_subgraph(g, odd_vertices(g));
  for (const VertexSet& comp : components(sub.graph)) {
    std::vector<Vertex> original;
    for (Vertex v : comp) {
      original.push_back(sub.vertex_origin[v]);
    }
    if (VertexSet(original) == blocking) {
      return blocking.size() % 2 == 1;
    }
  }
  return false;
}

bool coloring_valid(const Multigraph& g, const TwoColoring& coloring, Mode mode) {
  return verify_decomposition(g, coloring, mode).valid;
}

bool criterion_exhaustive(std::string& detail) {
  const auto start = Clock::now();
  long long graphs = 0;
  long long mismatches = 0;
  long long invalid = 0;
  for (int n = 0; n <= kExhaustiveMaxN; ++n) {
    testutil::for_each_multigraph(n, kExhaustiveMaxEdges, kExhaustiveMaxMult,
                                  [&](const Multigraph& g) {
                                    ++graphs;
                                    const auto fast = decompose_two_odd(g);
                                    const auto truth = brute_force(g, Mode::TwoOdd);
                                    if (fast.ok() != truth.has_value()) {
                                      ++mismatches;
                                      return;
                                    }
                                    if (fast.ok() &&
                                        !coloring_valid(g, *fast.coloring, Mode::TwoOdd)) {
                                      ++invalid;
                                    }
                                    if (truth &&
                                        !coloring_valid(g, *truth, Mode::TwoOdd)) {
                                      ++invalid;
                                    }
                                  });
  }
  const double elapsed = seconds_since(start);
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%lld graphs, %lld feasibility mismatches, %lld invalid colorings, %.1f s",
                graphs, mismatches, invalid, elapsed);
  detail = buffer;
  return mismatches == 0 && invalid == 0 && elapsed < kExhaustiveSecondsLimit;
}

bool criterion_randomized(std::string& detail) {
  const auto start = Clock::now();
  long long mismatches = 0;
  long long bad_certificates = 0;
  long long invalid = 0;
  for (std::uint64_t i = 0; i < kRandomInstances; ++i) {
    const Multigraph g = testutil::random_instance(i);

    const auto two_odd = decompose_two_odd(g);
    if (two_odd.ok() != brute_force(g, Mode::TwoOdd).has_value()) {
      ++mismatches;
    } else if (two_odd.ok()) {
      invalid += coloring_valid(g, *two_odd.coloring, Mode::TwoOdd) ? 0 : 1;
    } else {
      bad_certificates += witness_holds(g, two_odd.witness) ? 0 : 1;
    }

    const auto even_odd = decompose_even_odd(g);
    if (even_odd.ok() != brute_force(g, Mode::EvenOdd).has_value()) {
      ++mismatches;
    } else if (even_odd.ok()) {
      const TwoColoring coloring{even_odd.classes->even, even_odd.classes->odd};
      invalid += coloring_valid(g, coloring, Mode::EvenOdd) ? 0 : 1;
    } else {
      bad_certificates +=
          blocking_component_holds(g, even_odd.blocking_component) ? 0 : 1;
    }

    const auto two_even = decompose_two_even(g);
    if (two_even.ok() != brute_force(g, Mode::TwoEven).has_value()) {
      ++mismatches;
    } else if (two_even.ok()) {
      const TwoColoring coloring{two_even.classes->first, two_even.classes->second};
      invalid += coloring_valid(g, coloring, Mode::TwoEven) ? 0 : 1;
    } else {
      bad_certificates += (g.degree(two_even.odd_degree_vertex) % 2 == 1) ? 0 : 1;
    }
  }
  const double elapsed = seconds_since(start);
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%d instances x 3 modes, %lld mismatches, %lld bad certificates, "
                "%lld invalid colorings, %.1f s",
                kRandomInstances, mismatches, bad_certificates, invalid, elapsed);
  detail = buffer;
  return mismatches == 0 && bad_certificates == 0 && invalid == 0 &&
         elapsed < kRandomSecondsLimit;
}

bool criterion_fixtures(std::string& detail) {
  struct Fixture {
    const char* name;
    Multigraph graph;
    Mode mode;
    bool decomposable;
  };
  const std::vector<Fixture> fixtures = {
      {"P3 two-odd", testutil::path(3), Mode::TwoOdd, true},
      {"K3 two-odd", testutil::complete(3), Mode::TwoOdd, false},
      {"K1,3 two-odd", testutil::star(3), Mode::TwoOdd, true},
      {"W4 two-odd", testutil::wheel4(), Mode::TwoOdd, false},
      {"doubled triangle two-odd", testutil::shannon(2, 2, 2), Mode::TwoOdd, false},
      {"three single edges two-odd", testutil::disjoint_edges(3), Mode::TwoOdd, true},
      {"C4 even-odd", testutil::cycle(4), Mode::EvenOdd, true},
      {"C4 two-even", testutil::cycle(4), Mode::TwoEven, true},
      {"P4 even-odd", testutil::path(4), Mode::EvenOdd, false},
  };
  std::string failures;
  for (const Fixture& fixture : fixtures) {
    bool fast = false;
    switch (fixture.mode) {
      case Mode::TwoOdd:
        fast = decompose_two_odd(fixture.graph).ok();
        break;
      case Mode::EvenOdd:
        fast = decompose_even_odd(fixture.graph).ok();
        break;
      case Mode::TwoEven:
        fast = decompose_two_even(fixture.graph).ok();
        break;
    }
    const bool truth = brute_force(fixture.graph, fixture.mode).has_value();
    if (fast != fixture.decomposable || truth != fixture.decomposable) {
      failures += std::string(" ") + fixture.name;
    }
  }
  // the three disjoint edges must land in a single class
  const auto single_class = decompose_two_odd(testutil::disjoint_edges(3));
  if (!single_class.ok() || !single_class.coloring->blue.empty() ||
      single_class.coloring->red.size() != 3) {
    failures += " three-single-edges-one-class";
  }
  detail = failures.empty()
               ? std::to_string(fixtures.size()) + " fixtures, all verdicts brute-checked"
               : "failed:" + failures;
  return failures.empty();
}

bool criterion_forests(std::string& detail) {
  long long failures = 0;
  long long brute_checked = 0;
  for (std::uint64_t i = 0; i < kForestInstances; ++i) {
    const int n = 1 + static_cast<int>(i % 50);
    const int m = static_cast<int>(i) % n;
    const Multigraph g = generate({n, m, i, 1, true});
    const auto r = decompose_two_odd(g);
    if (!r.ok() || !coloring_valid(g, *r.coloring, Mode::TwoOdd)) {
      ++failures;
      continue;
    }
    if (g.edge_count() <= kBruteCrossCheckEdges) {
      ++brute_checked;
      if (!brute_force(g, Mode::TwoOdd).has_value()) {
        ++failures;
      }
    }
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%d forests decomposed, %lld brute-checked, %lld failures",
                kForestInstances, brute_checked, failures);
  detail = buffer;
  return failures == 0;
}

bool criterion_solver_equivalence(std::string& detail) {
  long long disagreements = 0;
  long long parity_failures = 0;
  for (std::uint64_t i = 0; i < kSolverInstances; ++i) {
    const Multigraph g = normalize(testutil::random_instance(i + 0x5eed0000u)).graph;
    const auto matrix = two_odd_partition(g, Solver::Matrix);
    const auto graph = two_odd_partition(g, Solver::Graph);
    if (matrix.ok() != graph.ok()) {
      ++disagreements;
      continue;
    }
    const ComponentClassification cc = classify_components(g);
    for (const auto* result : {&matrix, &graph}) {
      if (!result->ok()) {
        continue;
      }
      const RBPartition& part = result->partition.value();
      for (const VertexSet& y : cc.even_odd_order) {
        if (edges_between(g, part.r_vertices, y) % 2 != 1 ||
            edges_between(g, part.b_vertices, y) % 2 != 1) {
          ++parity_failures;
        }
      }
      for (const VertexSet& z : cc.even_even_order) {
        if (edges_between(g, part.r_vertices, z) % 2 != 0 ||
            edges_between(g, part.b_vertices, z) % 2 != 0) {
          ++parity_failures;
        }
      }
    }
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%d instances, %lld solver disagreements, %lld parity failures",
                kSolverInstances, disagreements, parity_failures);
  detail = buffer;
  return disagreements == 0 && parity_failures == 0;
}

bool criterion_characterization(std::string& detail) {
  long long graphs = 0;
  long long mismatches = 0;
  for (int n = 0; n <= kExhaustiveMaxN; ++n) {
    testutil::for_each_multigraph(
        n, kExhaustiveMaxEdges, kExhaustiveMaxMult, [&](const Multigraph& g) {
          const ComponentClassification cc = classify_components(g);
          if (cc.even_odd_order.size() + cc.even_even_order.size() > 12) {
            return;
          }
          ++graphs;
          const bool condition = !check_ns_condition(g).has_value();
          const bool solver = decompose_two_odd(g).ok();
          const bool truth = brute_force(g, Mode::TwoOdd).has_value();
          if (condition != solver || solver != truth) {
            ++mismatches;
          }
        });
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%lld graphs, %lld three-way mismatches", graphs,
                mismatches);
  detail = buffer;
  return mismatches == 0;
}

bool criterion_star_parity(std::string& detail) {
  long long stars = 0;
  long long violations = 0;
  auto check = [&](const Multigraph& g) {
    ++stars;
    const StarGraph star = build_gstar(g, classify_components(g), /*with_b=*/false);
    for (int w = 0; w < star.w_count(); ++w) {
      if (star.w_degree(w) % 2 != 0) {
        ++violations;
      }
    }
  };
  for (int n = 0; n <= kExhaustiveMaxN; ++n) {
    testutil::for_each_multigraph(n, kExhaustiveMaxEdges, kExhaustiveMaxMult, check);
  }
  for (std::uint64_t i = 0; i < kRandomInstances; ++i) {
    check(testutil::random_instance(i));
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%lld instances, %lld odd w-side degrees", stars,
                violations);
  detail = buffer;
  return violations == 0;
}

bool criterion_scaling(std::string& detail) {
  double worst = 0.0;
  long long failures = 0;
  for (std::uint64_t seed : {1, 2, 3}) {
    const Multigraph g = generate({kScalingN, kScalingM, seed, 1, false});
    const auto start = Clock::now();
    const auto r = decompose_two_odd(g);
    const double elapsed = seconds_since(start);
    worst = worst < elapsed ? elapsed : worst;
    if (elapsed >= kScalingSecondsLimit) {
      ++failures;
    }
    if (r.ok()) {
      if (!coloring_valid(g, *r.coloring, Mode::TwoOdd)) {
        ++failures;
      }
    } else if (!witness_holds(g, r.witness)) {
      ++failures;
    }
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "n=%d m=%d, 3 seeds, worst solve %.2f s (limit %.0f s), %lld failures",
                kScalingN, kScalingM, worst, kScalingSecondsLimit, failures);
  detail = buffer;
  return failures == 0;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*check)(std::string&);
  };
  const Criterion criteria[] = {
      {"oracle equivalence, exhaustive", &criterion_exhaustive},
      {"oracle equivalence, randomized", &criterion_randomized},
      {"fixture verdicts", &criterion_fixtures},
      {"forests always decompose", &criterion_forests},
      {"solver equivalence", &criterion_solver_equivalence},
      {"characterization three-way agreement", &criterion_characterization},
      {"component graph parity invariant", &criterion_star_parity},
      {"scaling smoke test", &criterion_scaling},
  };

  int failed = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    std::string outcome_detail;
    bool passed = false;
    try {
      passed = criterion.check(outcome_detail);
    } catch (const Error& e) {
      outcome_detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %s — %s (%s)\n", index, passed ? "PASS" : "FAIL",
                criterion.name, outcome_detail.c_str());
    std::fflush(stdout);
    failed += passed ? 0 : 1;
  }
  std::printf("acceptance: %d of 8 criteria passed\n", 8 - failed);
  return failed;
}
