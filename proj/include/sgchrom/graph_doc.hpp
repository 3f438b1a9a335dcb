#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sgchrom/signed_graph.hpp"

namespace sgchrom {

// Parse failure with the 1-based source line it occurred on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// One edge declaration as written, with its source line. Vertices are the
// 1-based names from the file.
struct EdgeDecl {
  enum class Type : std::uint8_t { Link, Loop, Halfedge };
  Type type = Type::Link;
  int v = 0;
  int w = 0;      // links only
  int sign = +1;  // links and loops
  int line = 0;

  // Line provenance is display-only and ignored by equality.
  friend bool operator==(const EdgeDecl& a, const EdgeDecl& b) {
    return a.type == b.type && a.v == b.v && a.w == b.w && a.sign == b.sign;
  }
};

struct GraphDocument {
  GraphMode mode = GraphMode::Signed;
  int vertex_count = 0;
  std::vector<EdgeDecl> edges;

  friend bool operator==(const GraphDocument& a, const GraphDocument& b) {
    return a.mode == b.mode && a.vertex_count == b.vertex_count && a.edges == b.edges;
  }
};

// Grammar: the first significant line is `signed` or `unsigned`, the second
// `vertices <n>`; then any number of `edge <v> <w> <+|->`, `loop <v> <+|->`
// and `halfedge <v>` lines. `#` starts a comment, blank lines are skipped.
// Unsigned documents allow only positive links and loops and no halfedges.
GraphDocument parse_graph_text(const std::string& text);

// Canonical text form; parsing it again yields an equal document.
std::string render_graph_text(const GraphDocument& doc);

// Builds the graph (0-based vertices, labels 1..n).
SignedGraph to_graph(const GraphDocument& doc);

}  // namespace sgchrom
