#ifndef ODDSPLIT_GF2_HPP
#define ODDSPLIT_GF2_HPP

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

#include "oddsplit/errors.hpp"

namespace oddsplit {

/// Packed bit vector; rows of GF(2) systems are XORed word-wise through it.
class BitVector {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other);
  bool any() const;
  std::size_t count() const;
  std::size_t find_first() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// System of linear equations over GF(2): one variable per column, one
/// equation per row.
struct Gf2System {
  struct Row {
    BitVector coeffs;
    bool rhs = false;
  };

  int num_vars = 0;
  std::vector<Row> rows;

  void add_row(BitVector coeffs, bool rhs) { rows.push_back(Row{std::move(coeffs), rhs}); }
};

/// Either a satisfying assignment or an inconsistency certificate: a
/// selection of rows whose coefficient vectors cancel while the right-hand
/// sides sum to 1.
struct Gf2Outcome {
  std::optional<BitVector> solution;  // length num_vars
  BitVector certificate;              // row selection, engaged iff no solution
  bool consistent() const { return solution.has_value(); }
};

/// Gauss-Jordan elimination. Pivots take the lowest variable index first and
/// the first row that can host it; free variables end up 0. Row provenance
/// is tracked so an inconsistent row yields its certificate directly.
Gf2Outcome solve(const Gf2System& system);

bool satisfies(const Gf2System& system, const BitVector& assignment);

/// Checks the certificate invariant: the selected rows sum to the zero
/// coefficient vector with right-hand sides summing to 1.
bool is_valid_certificate(const Gf2System& system, const BitVector& certificate);

enum class WTag : std::uint8_t { Y, Z };

/// Bipartite component graph: one x-node per component of the odd-degree
/// side, one w-node per component of the even-degree side (tagged Y or Z by
/// order parity), adjacency by odd cross-edge counts. With the constant node
/// b, every adjacency to b plays the role of a right-hand side of 1; b
/// starts adjacent to exactly the Y-tagged nodes.
class StarGraph {
 public:
  StarGraph() = default;
  StarGraph(int x_count, std::vector<WTag> w_tags, bool with_b);

  int x_count() const { return x_count_; }
  int w_count() const { return static_cast<int>(w_tags_.size()); }
  bool has_b() const { return has_b_; }
  WTag w_tag(int w) const { return w_tags_[static_cast<std::size_t>(w)]; }

  bool adjacent(int x, int w) const { return rows_[static_cast<std::size_t>(w)].test(static_cast<std::size_t>(x)); }
  void set_adjacent(int x, int w, bool value) { rows_[static_cast<std::size_t>(w)].set(static_cast<std::size_t>(x), value); }
  bool b_adjacent(int w) const { return b_bits_[static_cast<std::size_t>(w)]; }
  void set_b_adjacent(int w, bool value) { b_bits_[static_cast<std::size_t>(w)] = value; }

  /// GF(2) row addition: toggles target's adjacency (including to b) by
  /// source's.
  void add_row_into(int source_w, int target_w) {
    rows_[static_cast<std::size_t>(target_w)] ^= rows_[static_cast<std::size_t>(source_w)];
    b_bits_[static_cast<std::size_t>(target_w)] =
        b_bits_[static_cast<std::size_t>(target_w)] != b_bits_[static_cast<std::size_t>(source_w)];
  }

  const BitVector& x_row(int w) const { return rows_[static_cast<std::size_t>(w)]; }
  int x_degree(int x) const;
  int w_degree(int w) const;  // x-side neighbors only, never counts b

  /// The system this graph currently represents: coefficients from the x-side
  /// adjacency, right-hand sides from adjacency to b (0 everywhere if b is
  /// absent).
  Gf2System to_system() const;

 private:
  int x_count_ = 0;
  bool has_b_ = false;
  std::vector<WTag> w_tags_;
  std::vector<BitVector> rows_;  // per w-node, bits over x-nodes
  std::vector<bool> b_bits_;     // per w-node, adjacency to b
};

struct GraphElimination {
  bool feasible = false;
  /// Per x-node: true = red side (variable 1), false = blue side.
  std::vector<bool> assignment;
};

/// Runs the elimination one pivot at a time so tests can inspect the
/// intermediate graphs.
class GraphEliminator {
 public:
  explicit GraphEliminator(StarGraph star);

  const StarGraph& star() const { return star_; }

  /// Performs one pivot step; returns false when no eligible edge remains.
  /// An edge x-w is eligible when x has degree at least two and w was never
  /// chosen before; the smallest (x, w) pair wins.
  bool step();

  /// Runs remaining steps and extracts the feasibility verdict and
  /// assignment.
  GraphElimination finish();

 private:
  StarGraph star_;
  std::vector<bool> w_chosen_;
};

/// Full pipeline over a star graph that includes b. Throws
/// MissingConstantNodeError otherwise.
GraphElimination graph_eliminate(const StarGraph& star);

}  // namespace oddsplit

#endif  // ODDSPLIT_GF2_HPP
