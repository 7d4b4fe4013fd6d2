#include "oddsplit/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "oddsplit/errors.hpp"

namespace oddsplit {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      continue;
    }
    return c == '#';
  }
  return true;
}

std::pair<long long, long long> parse_int_pair(const std::string& line, int line_no,
                                               const char* what) {
  std::istringstream iss(line);
  long long a = 0;
  long long b = 0;
  if (!(iss >> a >> b)) {
    throw ParseError(line_no, std::string("expected ") + what);
  }
  std::string rest;
  if (iss >> rest) {
    throw ParseError(line_no, "trailing content after " + std::string(what));
  }
  return {a, b};
}

int checked_int(long long value, int line_no, const char* what) {
  if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
    throw ParseError(line_no, std::string(what) + " does not fit a 32-bit integer");
  }
  return static_cast<int>(value);
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) {
      continue;
    }
    if (!have_header) {
      auto [a, b] = parse_int_pair(line, line_no, "header 'n m'");
      if (a < 0 || b < 0) {
        throw ParseError(line_no, "header counts must be nonnegative");
      }
      n = checked_int(a, line_no, "vertex count");
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edge lines than the header's m");
    }
    auto [u, v] = parse_int_pair(line, line_no, "edge 'u v'");
    edges.push_back({checked_int(u, line_no, "endpoint"), checked_int(v, line_no, "endpoint")});
  }
  if (!have_header) {
    throw ParseError(line_no + 1, "missing header 'n m'");
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                      std::to_string(edges.size()));
  }
  return Multigraph::from_edge_list(n, edges);
}

Multigraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open " + path);
  }
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << edge.u << ' ' << edge.v << '\n';
  }
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::TwoOdd:
      return "two-odd";
    case Mode::EvenOdd:
      return "even-odd";
    case Mode::TwoEven:
      return "two-even";
  }
  return "two-odd";
}

std::optional<Mode> mode_from_name(const std::string& name) {
  if (name == "two-odd") {
    return Mode::TwoOdd;
  }
  if (name == "even-odd") {
    return Mode::EvenOdd;
  }
  if (name == "two-even") {
    return Mode::TwoEven;
  }
  return std::nullopt;
}

namespace {

nlohmann::json ids_json(const EdgeSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (EdgeId e : set) {
    out.push_back(e);
  }
  return out;
}

nlohmann::json vertices_json(const VertexSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : set) {
    out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> ids_from_json(const nlohmann::json& arr) {
  std::vector<EdgeId> out;
  for (const auto& value : arr) {
    out.push_back(value.get<EdgeId>());
  }
  return out;
}

VertexSet vertices_from_json(const nlohmann::json& arr) {
  std::vector<Vertex> out;
  for (const auto& value : arr) {
    out.push_back(value.get<Vertex>());
  }
  return VertexSet(out);
}

}  // namespace

std::string to_json(const ResultDocument& doc) {
  nlohmann::json j;
  j["mode"] = doc.mode;
  j["decomposable"] = doc.decomposable;
  if (doc.classes) {
    j["classes"] = {ids_json(doc.classes->red), ids_json(doc.classes->blue)};
  }
  if (doc.subset_witness) {
    nlohmann::json cert;
    cert["y_members"] = nlohmann::json::array();
    cert["z_members"] = nlohmann::json::array();
    for (const VertexSet& members : doc.subset_witness->y_members) {
      cert["y_members"].push_back(vertices_json(members));
    }
    for (const VertexSet& members : doc.subset_witness->z_members) {
      cert["z_members"].push_back(vertices_json(members));
    }
    j["certificate"] = std::move(cert);
  }
  if (doc.odd_order_component) {
    j["certificate"] = {{"odd_order_component", vertices_json(*doc.odd_order_component)}};
  }
  if (doc.odd_degree_vertex) {
    j["certificate"] = {{"odd_degree_vertex", *doc.odd_degree_vertex}};
  }
  if (doc.exhausted) {
    j["exhausted"] = true;
  }
  j["normalization"] = doc.stripped;
  return j.dump(2) + "\n";
}

ResultDocument result_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    ResultDocument doc;
    doc.mode = j.at("mode").get<std::string>();
    if (!mode_from_name(doc.mode)) {
      throw ParseError(1, "unknown mode '" + doc.mode + "'");
    }
    doc.decomposable = j.at("decomposable").get<bool>();
    if (j.contains("classes")) {
      const auto& classes = j.at("classes");
      if (!classes.is_array() || classes.size() != 2) {
        throw ParseError(1, "classes must hold exactly two arrays");
      }
      doc.classes = TwoColoring{EdgeSet(ids_from_json(classes.at(0))),
                                EdgeSet(ids_from_json(classes.at(1)))};
    }
    if (doc.decomposable && !doc.classes) {
      throw ParseError(1, "decomposable result without classes");
    }
    if (j.contains("certificate")) {
      const auto& cert = j.at("certificate");
      if (cert.contains("y_members") || cert.contains("z_members")) {
        SubsetWitness witness;
        for (const auto& members : cert.value("y_members", nlohmann::json::array())) {
          witness.y_members.push_back(vertices_from_json(members));
        }
        for (const auto& members : cert.value("z_members", nlohmann::json::array())) {
          witness.z_members.push_back(vertices_from_json(members));
        }
        doc.subset_witness = std::move(witness);
      } else if (cert.contains("odd_order_component")) {
        doc.odd_order_component = vertices_from_json(cert.at("odd_order_component"));
      } else if (cert.contains("odd_degree_vertex")) {
        doc.odd_degree_vertex = cert.at("odd_degree_vertex").get<Vertex>();
      } else {
        throw ParseError(1, "certificate has no recognized field");
      }
    }
    doc.exhausted = j.value("exhausted", false);
    for (const auto& value : j.value("normalization", nlohmann::json::array())) {
      doc.stripped.push_back(value.get<Vertex>());
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("bad result document: ") + e.what());
  }
}

namespace {

std::string dot_impl(const Multigraph& g, const TwoColoring* coloring) {
  std::ostringstream out;
  out << "graph oddsplit {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << "  " << edge.u << " -- " << edge.v;
    if (coloring != nullptr) {
      out << (coloring->red.contains(e) ? " [color=red]" : " [color=blue]");
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const Multigraph& g) { return dot_impl(g, nullptr); }

std::string to_dot(const Multigraph& g, const TwoColoring& coloring) {
  return dot_impl(g, &coloring);
}

}  // namespace oddsplit
