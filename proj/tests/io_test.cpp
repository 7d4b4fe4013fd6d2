#include <doctest.h>

#include <optional>
#include <sstream>
#include <string>

#include "oddsplit/errors.hpp"
#include "oddsplit/io.hpp"
#include "oddsplit/multigraph.hpp"
#include "test_util.hpp"

using namespace oddsplit;

namespace {

Multigraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string unparse(const Multigraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("edge lists round trip") {
  const Multigraph g =
      Multigraph::from_edge_list(5, {{0, 1}, {0, 1}, {3, 1}});  // parallel + isolated
  const std::string text = unparse(g);
  CHECK(text == "5 3\n0 1\n0 1\n3 1\n");
  const Multigraph back = parse(text);
  CHECK(back.vertex_count() == g.vertex_count());
  REQUIRE(back.edge_count() == g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(back.edge(e) == g.edge(e));
  }
  CHECK(unparse(parse("0 0\n")) == "0 0\n");
}

TEST_CASE("parser skips comments and blank lines") {
  const Multigraph g = parse("# made by hand\n\n  \t\n3 2\n# middle\n0 1\n\n1 2\n# end\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});
}

TEST_CASE("parser reports precise failures") {
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("abc\n") == 1);
  CHECK(line_of("") == 1);
  CHECK(line_of("# only a comment\n") == 2);
  CHECK(line_of("2 2\n0 1\n") == 3);
  CHECK(line_of("2 1\n0 1\n1 0\n") == 3);
  CHECK(line_of("2 1\n0 1 9\n") == 2);
  CHECK(line_of("-2 0\n") == 1);
  CHECK(line_of("2 1\nx y\n") == 2);
  CHECK_THROWS_AS(parse("2 1\n0 0\n"), LoopEdgeError);
  CHECK_THROWS_AS(parse("2 1\n0 5\n"), VertexOutOfRangeError);
  CHECK_THROWS_AS(parse("2 1\n0 -1\n"), VertexOutOfRangeError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/input.txt"), ParseError);
}

TEST_CASE("mode names round trip") {
  for (Mode mode : {Mode::TwoOdd, Mode::EvenOdd, Mode::TwoEven}) {
    const auto back = mode_from_name(mode_name(mode));
    REQUIRE(back.has_value());
    CHECK(*back == mode);
  }
  CHECK(mode_name(Mode::TwoOdd) == "two-odd");
  CHECK(mode_name(Mode::EvenOdd) == "even-odd");
  CHECK(mode_name(Mode::TwoEven) == "two-even");
  CHECK_FALSE(mode_from_name("two_odd").has_value());
  CHECK_FALSE(mode_from_name("").has_value());
}

TEST_CASE("result documents round trip through JSON") {
  SUBCASE("decomposable with classes") {
    ResultDocument doc;
    doc.mode = "two-odd";
    doc.decomposable = true;
    doc.classes = TwoColoring{EdgeSet({0, 2}), EdgeSet({1})};
    doc.stripped = {4, 7};
    const ResultDocument back = result_from_json(to_json(doc));
    CHECK(back.mode == "two-odd");
    CHECK(back.decomposable);
    REQUIRE(back.classes.has_value());
    CHECK(back.classes->red == EdgeSet({0, 2}));
    CHECK(back.classes->blue == EdgeSet({1}));
    CHECK(back.stripped == std::vector<Vertex>{4, 7});
    CHECK_FALSE(back.exhausted);
  }
  SUBCASE("subset witness") {
    ResultDocument doc;
    doc.mode = "two-odd";
    doc.decomposable = false;
    SubsetWitness witness;
    witness.y_members = {VertexSet({4}), VertexSet({0, 1, 2})};
    witness.z_members = {VertexSet({6, 7})};
    doc.subset_witness = witness;
    const ResultDocument back = result_from_json(to_json(doc));
    CHECK_FALSE(back.decomposable);
    REQUIRE(back.subset_witness.has_value());
    REQUIRE(back.subset_witness->y_members.size() == 2);
    CHECK(back.subset_witness->y_members[1] == VertexSet({0, 1, 2}));
    REQUIRE(back.subset_witness->z_members.size() == 1);
    CHECK(back.subset_witness->z_members[0] == VertexSet({6, 7}));
  }
  SUBCASE("odd-order component") {
    ResultDocument doc;
    doc.mode = "even-odd";
    doc.decomposable = false;
    doc.odd_order_component = VertexSet({3, 5, 8});
    const ResultDocument back = result_from_json(to_json(doc));
    REQUIRE(back.odd_order_component.has_value());
    CHECK(*back.odd_order_component == VertexSet({3, 5, 8}));
  }
  SUBCASE("odd-degree vertex, including vertex zero") {
    ResultDocument doc;
    doc.mode = "two-even";
    doc.decomposable = false;
    doc.odd_degree_vertex = 0;
    const ResultDocument back = result_from_json(to_json(doc));
    REQUIRE(back.odd_degree_vertex.has_value());
    CHECK(*back.odd_degree_vertex == 0);
  }
  SUBCASE("exhausted oracle run") {
    ResultDocument doc;
    doc.mode = "two-odd";
    doc.decomposable = false;
    doc.exhausted = true;
    const ResultDocument back = result_from_json(to_json(doc));
    CHECK(back.exhausted);
    CHECK_FALSE(back.classes.has_value());
    CHECK_FALSE(back.subset_witness.has_value());
  }
}

TEST_CASE("result document field names are frozen") {
  ResultDocument doc;
  doc.mode = "two-odd";
  doc.decomposable = true;
  doc.classes = TwoColoring{EdgeSet({0}), EdgeSet({1})};
  doc.stripped = {2};
  const std::string text = to_json(doc);
  CHECK(text.find("\"mode\": \"two-odd\"") != std::string::npos);
  CHECK(text.find("\"decomposable\": true") != std::string::npos);
  CHECK(text.find("\"classes\"") != std::string::npos);
  CHECK(text.find("\"normalization\"") != std::string::npos);

  ResultDocument blocked;
  blocked.mode = "two-odd";
  blocked.subset_witness = SubsetWitness{{VertexSet({4})}, {}};
  const std::string blocked_text = to_json(blocked);
  CHECK(blocked_text.find("\"certificate\"") != std::string::npos);
  CHECK(blocked_text.find("\"y_members\"") != std::string::npos);
  CHECK(blocked_text.find("\"z_members\"") != std::string::npos);

  ResultDocument even_odd;
  even_odd.mode = "even-odd";
  even_odd.odd_order_component = VertexSet({0});
  CHECK(to_json(even_odd).find("\"odd_order_component\"") != std::string::npos);

  ResultDocument two_even;
  two_even.mode = "two-even";
  two_even.odd_degree_vertex = 3;
  CHECK(to_json(two_even).find("\"odd_degree_vertex\": 3") != std::string::npos);

  ResultDocument oracle;
  oracle.mode = "two-odd";
  oracle.exhausted = true;
  CHECK(to_json(oracle).find("\"exhausted\": true") != std::string::npos);
}

TEST_CASE("malformed result documents raise ParseError") {
  CHECK_THROWS_AS(result_from_json("not json"), ParseError);
  CHECK_THROWS_AS(result_from_json("{}"), ParseError);
  CHECK_THROWS_AS(result_from_json(R"({"mode": "three-odd", "decomposable": false})"),
                  ParseError);
  CHECK_THROWS_AS(result_from_json(R"({"mode": "two-odd", "decomposable": true})"),
                  ParseError);
  CHECK_THROWS_AS(
      result_from_json(
          R"({"mode": "two-odd", "decomposable": true, "classes": [[0]]})"),
      ParseError);
  CHECK_THROWS_AS(
      result_from_json(
          R"({"mode": "two-odd", "decomposable": false, "certificate": {}})"),
      ParseError);
}

TEST_CASE("dot export styles classes") {
  const Multigraph g = testutil::path(3);
  const std::string plain = to_dot(g);
  CHECK(plain.find("graph oddsplit {") != std::string::npos);
  CHECK(plain.find("0 -- 1;") != std::string::npos);
  CHECK(plain.find("1 -- 2;") != std::string::npos);
  CHECK(plain.find("color") == std::string::npos);

  const TwoColoring coloring{EdgeSet({0}), EdgeSet({1})};
  const std::string styled = to_dot(g, coloring);
  CHECK(styled.find("0 -- 1 [color=red];") != std::string::npos);
  CHECK(styled.find("1 -- 2 [color=blue];") != std::string::npos);
}
