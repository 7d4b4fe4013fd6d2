#include "oddsplit/gf2.hpp"

#include <bit>
#include <cassert>

namespace oddsplit {

BitVector& BitVector::operator^=(const BitVector& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

bool BitVector::any() const {
  for (std::uint64_t w : words_) {
    if (w != 0) {
      return true;
    }
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

std::size_t BitVector::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return npos;
}

Gf2Outcome solve(const Gf2System& system) {
  const std::size_t num_rows = system.rows.size();
  const auto num_vars = static_cast<std::size_t>(system.num_vars);

  struct WorkRow {
    BitVector coeffs;
    bool rhs;
    BitVector provenance;  // original rows whose sum this row is
  };
  std::vector<WorkRow> work;
  work.reserve(num_rows);
  for (std::size_t i = 0; i < num_rows; ++i) {
    WorkRow row{system.rows[i].coeffs, system.rows[i].rhs, BitVector(num_rows)};
    row.provenance.set(i);
    work.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_row_of_var(num_vars, BitVector::npos);
  std::vector<bool> is_pivot_row(num_rows, false);
  for (std::size_t var = 0; var < num_vars; ++var) {
    std::size_t pivot = BitVector::npos;
    for (std::size_t r = 0; r < num_rows; ++r) {
      if (!is_pivot_row[r] && work[r].coeffs.test(var)) {
        pivot = r;
        break;
      }
    }
    if (pivot == BitVector::npos) {
      continue;  // free variable
    }
    is_pivot_row[pivot] = true;
    pivot_row_of_var[var] = pivot;
    for (std::size_t r = 0; r < num_rows; ++r) {
      if (r != pivot && work[r].coeffs.test(var)) {
        work[r].coeffs ^= work[pivot].coeffs;
        work[r].rhs ^= work[pivot].rhs;
        work[r].provenance ^= work[pivot].provenance;
      }
    }
  }

  for (std::size_t r = 0; r < num_rows; ++r) {
    if (!work[r].coeffs.any() && work[r].rhs) {
      return Gf2Outcome{std::nullopt, work[r].provenance};
    }
  }

  // Free variables are 0, so each pivot variable equals its row's right-hand
  // side after the Jordan sweep.
  BitVector solution(num_vars);
  for (std::size_t var = 0; var < num_vars; ++var) {
    if (pivot_row_of_var[var] != BitVector::npos) {
      solution.set(var, work[pivot_row_of_var[var]].rhs);
    }
  }
  return Gf2Outcome{std::move(solution), BitVector(num_rows)};
}

bool satisfies(const Gf2System& system, const BitVector& assignment) {
  for (const Gf2System::Row& row : system.rows) {
    bool lhs = false;
    for (int var = 0; var < system.num_vars; ++var) {
      const auto i = static_cast<std::size_t>(var);
      lhs ^= row.coeffs.test(i) && assignment.test(i);
    }
    if (lhs != row.rhs) {
      return false;
    }
  }
  return true;
}

bool is_valid_certificate(const Gf2System& system, const BitVector& certificate) {
  if (certificate.size() != system.rows.size() || !certificate.any()) {
    return false;
  }
  BitVector coeff_sum(static_cast<std::size_t>(system.num_vars));
  bool rhs_sum = false;
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    if (certificate.test(r)) {
      coeff_sum ^= system.rows[r].coeffs;
      rhs_sum ^= system.rows[r].rhs;
    }
  }
  return !coeff_sum.any() && rhs_sum;
}

StarGraph::StarGraph(int x_count, std::vector<WTag> w_tags, bool with_b)
    : x_count_(x_count), has_b_(with_b), w_tags_(std::move(w_tags)) {
  rows_.assign(w_tags_.size(), BitVector(static_cast<std::size_t>(x_count)));
  b_bits_.assign(w_tags_.size(), false);
  if (with_b) {
    for (std::size_t w = 0; w < w_tags_.size(); ++w) {
      b_bits_[w] = w_tags_[w] == WTag::Y;
    }
  }
}

int StarGraph::x_degree(int x) const {
  int deg = 0;
  for (const BitVector& row : rows_) {
    deg += row.test(static_cast<std::size_t>(x)) ? 1 : 0;
  }
  return deg;
}

int StarGraph::w_degree(int w) const {
  return static_cast<int>(rows_[static_cast<std::size_t>(w)].count());
}

Gf2System StarGraph::to_system() const {
  Gf2System system;
  system.num_vars = x_count_;
  for (std::size_t w = 0; w < w_tags_.size(); ++w) {
    system.add_row(rows_[w], b_bits_[w]);
  }
  return system;
}

GraphEliminator::GraphEliminator(StarGraph star) : star_(std::move(star)) {
  if (!star_.has_b()) {
    throw MissingConstantNodeError();
  }
  w_chosen_.assign(static_cast<std::size_t>(star_.w_count()), false);
}

bool GraphEliminator::step() {
  for (int x = 0; x < star_.x_count(); ++x) {
    if (star_.x_degree(x) < 2) {
      continue;
    }
    for (int w = 0; w < star_.w_count(); ++w) {
      if (w_chosen_[static_cast<std::size_t>(w)] || !star_.adjacent(x, w)) {
        continue;
      }
      // Pivot on edge x-w: complementing the bipartite neighborhoods is one
      // row addition of w's equation to every other equation containing x.
      w_chosen_[static_cast<std::size_t>(w)] = true;
      for (int other = 0; other < star_.w_count(); ++other) {
        if (other != w && star_.adjacent(x, other)) {
          star_.add_row_into(w, other);
        }
      }
      return true;
    }
  }
  return false;
}

GraphElimination GraphEliminator::finish() {
  while (step()) {
  }

  GraphElimination result;
  result.assignment.assign(static_cast<std::size_t>(star_.x_count()), false);

  // A w-node whose only remaining neighbor is b holds the equation 0 = 1.
  // The tag of the node is irrelevant here: with a fixed pivot order a
  // Z-tagged node can end up holding the contradiction just as well as a
  // Y-tagged one, so every node is inspected.
  for (int w = 0; w < star_.w_count(); ++w) {
    if (star_.b_adjacent(w) && star_.w_degree(w) == 0) {
      result.feasible = false;
      return result;
    }
  }
  result.feasible = true;

  // Degree >= 2 x-nodes are free variables: side blue (0), edges dropped.
  std::vector<bool> assigned(static_cast<std::size_t>(star_.x_count()), false);
  for (int x = 0; x < star_.x_count(); ++x) {
    if (star_.x_degree(x) >= 2) {
      assigned[static_cast<std::size_t>(x)] = true;
      for (int w = 0; w < star_.w_count(); ++w) {
        star_.set_adjacent(x, w, false);
      }
    }
  }

  // Every remaining x-node is a leaf or isolated. A b-neighbor with several
  // leaves sends exactly one of them (the smallest) to red so their sum is 1.
  for (int w = 0; w < star_.w_count(); ++w) {
    if (!star_.b_adjacent(w) || star_.w_degree(w) < 2) {
      continue;
    }
    bool red_taken = false;
    for (int x = 0; x < star_.x_count(); ++x) {
      if (star_.adjacent(x, w)) {
        result.assignment[static_cast<std::size_t>(x)] = !red_taken;
        red_taken = true;
        assigned[static_cast<std::size_t>(x)] = true;
      }
    }
  }

  // The rest follow their component: reaching b means the variable is pinned
  // to 1, everything else stays free at 0. After the removals above each
  // unassigned x-leaf hangs off a single w-node, so its component contains b
  // exactly when that w-node is adjacent to b.
  for (int x = 0; x < star_.x_count(); ++x) {
    if (assigned[static_cast<std::size_t>(x)]) {
      continue;
    }
    for (int w = 0; w < star_.w_count(); ++w) {
      if (star_.adjacent(x, w) && star_.b_adjacent(w)) {
        result.assignment[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return result;
}

GraphElimination graph_eliminate(const StarGraph& star) {
  GraphEliminator eliminator(star);
  return eliminator.finish();
}

}  // namespace oddsplit
