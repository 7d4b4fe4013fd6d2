#ifndef ODDSPLIT_ERRORS_HPP
#define ODDSPLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oddsplit {

/// Base class for all errors raised by the library on contract violations.
/// Nonexistence of a decomposition is never reported as an exception; the
/// decompose/oracle entry points return outcome values carrying a witness.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class LoopEdgeError : public Error {
 public:
  LoopEdgeError(int vertex, int edge_index)
      : Error("loop edge at vertex " + std::to_string(vertex) + " (edge " +
              std::to_string(edge_index) + ")"),
        vertex(vertex),
        edge_index(edge_index) {}
  int vertex;
  int edge_index;
};

class VertexOutOfRangeError : public Error {
 public:
  VertexOutOfRangeError(int vertex, int vertex_count)
      : Error("vertex " + std::to_string(vertex) + " out of range [0, " +
              std::to_string(vertex_count) + ")"),
        vertex(vertex),
        vertex_count(vertex_count) {}
  int vertex;
  int vertex_count;
};

class OverlappingSetsError : public Error {
 public:
  explicit OverlappingSetsError(int vertex)
      : Error("vertex sets overlap at vertex " + std::to_string(vertex)),
        vertex(vertex) {}
  int vertex;
};

class NotAPartitionError : public Error {
 public:
  explicit NotAPartitionError(const std::string& what) : Error(what) {}
};

class TooManyEdgesError : public Error {
 public:
  TooManyEdgesError(int edges, int cap)
      : Error("instance has " + std::to_string(edges) +
              " edges, brute-force cap is " + std::to_string(cap)),
        edges(edges),
        cap(cap) {}
  int edges;
  int cap;
};

class TooManyComponentsError : public Error {
 public:
  TooManyComponentsError(int count, int cap)
      : Error("instance has " + std::to_string(count) +
              " even-side components, subset enumeration cap is " +
              std::to_string(cap)),
        count(count),
        cap(cap) {}
  int count;
  int cap;
};

class MissingConstantNodeError : public Error {
 public:
  MissingConstantNodeError()
      : Error("star graph has no constant node b; build it with with_b=true") {}
};

class InfeasibleSpecError : public Error {
 public:
  explicit InfeasibleSpecError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace oddsplit

#endif  // ODDSPLIT_ERRORS_HPP
