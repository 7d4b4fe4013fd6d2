#ifndef ODDSPLIT_ORACLE_HPP
#define ODDSPLIT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "oddsplit/decompose.hpp"
#include "oddsplit/multigraph.hpp"

namespace oddsplit {

enum class Mode { TwoOdd, EvenOdd, TwoEven };

/// A vertex whose degree inside one class has the wrong parity. Class
/// indices are 1-based: class 1 is TwoColoring::red, class 2 is blue.
struct DegreeViolation {
  Vertex vertex;
  int class_index;
  int degree;
};

struct VerifyReport {
  bool valid = false;
  std::vector<DegreeViolation> violations;
};

/// Checks a coloring against the mode's parity contract. A vertex only
/// counts against a class it is incident to, so empty classes are fine.
/// TwoOdd wants odd degrees in both classes, EvenOdd wants class 1 even and
/// class 2 odd, TwoEven wants both even. Throws NotAPartitionError when the
/// classes overlap, miss edges, or name unknown edge ids.
VerifyReport verify_decomposition(const Multigraph& g, const TwoColoring& coloring, Mode mode);

/// Exhaustive ground truth: tries all 2^m colorings in binary counting
/// order (edge i lands in red iff bit i of the counter is clear) and
/// returns the first valid one, or nullopt once the space is exhausted.
/// Throws TooManyEdgesError above the cap.
std::optional<TwoColoring> brute_force(const Multigraph& g, Mode mode, int cap = 20);

struct GenSpec {
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  int max_multiplicity = 1;
  bool forest = false;
};

/// Seeded random multigraph: endpoints are sampled uniformly, loops and
/// edges beyond the multiplicity bound are rejected and redrawn. With the
/// forest flag the graph grows as a random forest instead (each edge
/// attaches a fresh vertex of a random permutation to a random earlier
/// one), which keeps it acyclic for any m ≤ n−1. Identical specs produce
/// identical graphs on every platform; see the repository documentation
/// for the exact drawing procedure. Throws InfeasibleSpecError when no
/// graph can satisfy the request.
Multigraph generate(const GenSpec& spec);

}  // namespace oddsplit

#endif  // ODDSPLIT_ORACLE_HPP
