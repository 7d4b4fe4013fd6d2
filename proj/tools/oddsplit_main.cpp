#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oddsplit/decompose.hpp"
#include "oddsplit/errors.hpp"
#include "oddsplit/io.hpp"
#include "oddsplit/multigraph.hpp"
#include "oddsplit/oracle.hpp"

namespace {

constexpr int kDefaultCap = 20;

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw oddsplit::Error("cannot write " + path);
  }
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw oddsplit::ParseError(0, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int default_cap_from_env() {
  const char* raw = std::getenv("ODDSPLIT_CAP");
  if (raw == nullptr) {
    return kDefaultCap;
  }
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw oddsplit::Error(std::string("ODDSPLIT_CAP is not an integer: ") + raw);
  }
}

oddsplit::Mode parse_mode(const std::string& name) {
  const auto mode = oddsplit::mode_from_name(name);
  if (!mode) {
    throw oddsplit::Error("unknown mode '" + name + "'");
  }
  return *mode;
}

int run_decompose(const std::string& input, const std::string& output,
                  const std::string& mode_flag, const std::string& solver_flag,
                  const std::string& format) {
  const oddsplit::Mode mode = parse_mode(mode_flag);
  const oddsplit::Multigraph g = oddsplit::read_edge_list_file(input);
  const oddsplit::Solver solver =
      solver_flag == "graph" ? oddsplit::Solver::Graph : oddsplit::Solver::Matrix;

  oddsplit::ResultDocument doc;
  doc.mode = mode_flag;
  switch (mode) {
    case oddsplit::Mode::TwoOdd: {
      auto result = oddsplit::decompose_two_odd(g, solver);
      doc.decomposable = result.ok();
      doc.stripped = result.stripped;
      if (result.ok()) {
        doc.classes = *result.coloring;
      } else {
        doc.subset_witness = result.witness;
      }
      break;
    }
    case oddsplit::Mode::EvenOdd: {
      auto result = oddsplit::decompose_even_odd(g);
      doc.decomposable = result.ok();
      doc.stripped = result.stripped;
      if (result.ok()) {
        doc.classes = oddsplit::TwoColoring{result.classes->even, result.classes->odd};
      } else {
        doc.odd_order_component = result.blocking_component;
      }
      break;
    }
    case oddsplit::Mode::TwoEven: {
      auto result = oddsplit::decompose_two_even(g);
      doc.decomposable = result.ok();
      doc.stripped = result.stripped;
      if (result.ok()) {
        doc.classes = oddsplit::TwoColoring{result.classes->first, result.classes->second};
      } else {
        doc.odd_degree_vertex = result.odd_degree_vertex;
      }
      break;
    }
  }

  if (format == "dot") {
    emit(output, doc.classes ? oddsplit::to_dot(g, *doc.classes) : oddsplit::to_dot(g));
  } else {
    emit(output, oddsplit::to_json(doc));
  }
  return doc.decomposable ? 0 : 1;
}

int run_verify(const std::string& input, const std::string& result_path) {
  const oddsplit::Multigraph g = oddsplit::read_edge_list_file(input);
  const oddsplit::ResultDocument doc = oddsplit::result_from_json(slurp(result_path));
  if (!doc.classes) {
    throw oddsplit::Error("result document carries no classes to verify");
  }
  const oddsplit::Mode mode = parse_mode(doc.mode);
  const oddsplit::VerifyReport report = oddsplit::verify_decomposition(g, *doc.classes, mode);
  for (const oddsplit::DegreeViolation& violation : report.violations) {
    std::cerr << "vertex " << violation.vertex << ": class " << violation.class_index
              << " degree " << violation.degree << " has the wrong parity\n";
  }
  return report.valid ? 0 : 1;
}

int run_oracle(const std::string& input, const std::string& output,
               const std::string& mode_flag, int cap) {
  const oddsplit::Mode mode = parse_mode(mode_flag);
  const oddsplit::Multigraph g = oddsplit::read_edge_list_file(input);
  const auto coloring = oddsplit::brute_force(g, mode, cap);

  oddsplit::ResultDocument doc;
  doc.mode = mode_flag;
  doc.decomposable = coloring.has_value();
  if (coloring) {
    doc.classes = *coloring;
  } else {
    doc.exhausted = true;
  }
  emit(output, oddsplit::to_json(doc));
  return doc.decomposable ? 0 : 1;
}

int run_gen(const oddsplit::GenSpec& spec, const std::string& output) {
  const oddsplit::Multigraph g = oddsplit::generate(spec);
  std::ostringstream out;
  oddsplit::write_edge_list(out, g);
  emit(output, out.str());
  return 0;
}

int run_export_dot(const std::string& input, const std::string& result_path,
                   const std::string& output) {
  const oddsplit::Multigraph g = oddsplit::read_edge_list_file(input);
  if (result_path.empty()) {
    emit(output, oddsplit::to_dot(g));
    return 0;
  }
  const oddsplit::ResultDocument doc = oddsplit::result_from_json(slurp(result_path));
  emit(output, doc.classes ? oddsplit::to_dot(g, *doc.classes) : oddsplit::to_dot(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odd/even subgraph decompositions of loopless multigraphs"};
  app.require_subcommand(1);

  int exit_code = 0;

  auto* decompose = app.add_subcommand("decompose", "decide and construct a decomposition");
  {
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("two-odd");
    auto solver = std::make_shared<std::string>("matrix");
    auto format = std::make_shared<std::string>("json");
    decompose->add_option("--input,-i", *input, "edge-list file")->required();
    decompose->add_option("--output,-o", *output, "output file (default stdout)");
    decompose->add_option("--mode", *mode, "two-odd, even-odd or two-even")
        ->check(CLI::IsMember({"two-odd", "even-odd", "two-even"}));
    decompose->add_option("--solver", *solver, "GF(2) backend for two-odd")
        ->check(CLI::IsMember({"matrix", "graph"}));
    decompose->add_option("--format", *format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    decompose->callback([&exit_code, input, output, mode, solver, format] {
      exit_code = run_decompose(*input, *output, *mode, *solver, *format);
    });
  }

  auto* verify = app.add_subcommand("verify", "check a result document against a graph");
  {
    auto input = std::make_shared<std::string>();
    auto result = std::make_shared<std::string>();
    verify->add_option("--input,-i", *input, "edge-list file")->required();
    verify->add_option("--result", *result, "result document to check")->required();
    verify->callback(
        [&exit_code, input, result] { exit_code = run_verify(*input, *result); });
  }

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  {
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("two-odd");
    auto cap = std::make_shared<int>(-1);
    oracle->add_option("--input,-i", *input, "edge-list file")->required();
    oracle->add_option("--output,-o", *output, "output file (default stdout)");
    oracle->add_option("--mode", *mode, "two-odd, even-odd or two-even")
        ->check(CLI::IsMember({"two-odd", "even-odd", "two-even"}));
    oracle->add_option("--cap", *cap, "edge cap (default ODDSPLIT_CAP or 20)");
    oracle->callback([&exit_code, input, output, mode, cap] {
      const int effective = *cap >= 0 ? *cap : default_cap_from_env();
      exit_code = run_oracle(*input, *output, *mode, effective);
    });
  }

  auto* gen = app.add_subcommand("gen", "generate a seeded random multigraph");
  {
    auto spec = std::make_shared<oddsplit::GenSpec>();
    auto output = std::make_shared<std::string>();
    gen->add_option("--n", spec->n, "vertex count")->required();
    gen->add_option("--m", spec->m, "edge count")->required();
    gen->add_option("--seed", spec->seed, "64-bit seed");
    gen->add_option("--max-mult", spec->max_multiplicity, "edge multiplicity bound");
    gen->add_flag("--forest", spec->forest, "grow an acyclic graph");
    gen->add_option("--output,-o", *output, "output file (default stdout)");
    gen->callback([&exit_code, spec, output] { exit_code = run_gen(*spec, *output); });
  }

  auto* export_dot = app.add_subcommand("export-dot", "emit DOT, optionally styled by a result");
  {
    auto input = std::make_shared<std::string>();
    auto result = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    export_dot->add_option("--input,-i", *input, "edge-list file")->required();
    export_dot->add_option("--result", *result, "result document for styling");
    export_dot->add_option("--output,-o", *output, "output file (default stdout)");
    export_dot->callback([&exit_code, input, result, output] {
      exit_code = run_export_dot(*input, *result, *output);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const oddsplit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
