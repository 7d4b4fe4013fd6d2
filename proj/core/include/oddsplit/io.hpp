#ifndef ODDSPLIT_IO_HPP
#define ODDSPLIT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oddsplit/decompose.hpp"
#include "oddsplit/multigraph.hpp"
#include "oddsplit/oracle.hpp"

namespace oddsplit {

/// Edge-list format: a header line "n m", then exactly m lines "u v" with
/// 0-indexed endpoints. Lines whose first non-blank character is '#' are
/// ignored. Parallel edges repeat; edge ids follow file order.
Multigraph read_edge_list(std::istream& in);
Multigraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Multigraph& g);

std::string mode_name(Mode mode);
std::optional<Mode> mode_from_name(const std::string& name);

/// The JSON answer of a decompose/oracle run. classes is present iff
/// decomposable; exactly one certificate variant (or the exhausted marker
/// for brute-force runs) is present iff not. normalization always lists the
/// stripped isolated vertices. All ids refer to the input file.
struct ResultDocument {
  std::string mode;
  bool decomposable = false;
  std::optional<TwoColoring> classes;
  std::optional<SubsetWitness> subset_witness;
  std::optional<VertexSet> odd_order_component;
  std::optional<Vertex> odd_degree_vertex;
  bool exhausted = false;
  std::vector<Vertex> stripped;
};

std::string to_json(const ResultDocument& doc);
ResultDocument result_from_json(const std::string& text);

/// DOT export; with a coloring, class-1 edges carry color=red and class-2
/// edges color=blue.
std::string to_dot(const Multigraph& g);
std::string to_dot(const Multigraph& g, const TwoColoring& coloring);

}  // namespace oddsplit

#endif  // ODDSPLIT_IO_HPP
