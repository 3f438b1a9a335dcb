#include "sgchrom/graph_doc.hpp"

#include <sstream>

namespace sgchrom {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

int parse_vertex(const std::string& tok, int n, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a vertex number, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected a vertex number, got '" + tok + "'");
  if (v < 1 || v > n)
    throw ParseError(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return v;
}

int parse_sign(const std::string& tok, int line) {
  if (tok == "+") return +1;
  if (tok == "-") return -1;
  throw ParseError(line, "expected sign + or -, got '" + tok + "'");
}

}  // namespace

GraphDocument parse_graph_text(const std::string& text) {
  GraphDocument doc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int stage = 0;  // 0: want mode, 1: want vertices, 2: edges
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;
    if (stage == 0) {
      if (tok.size() != 1 || (tok[0] != "signed" && tok[0] != "unsigned"))
        throw ParseError(lineno, "expected 'signed' or 'unsigned' header");
      doc.mode = tok[0] == "signed" ? GraphMode::Signed : GraphMode::Unsigned;
      stage = 1;
      continue;
    }
    if (stage == 1) {
      if (tok.size() != 2 || tok[0] != "vertices")
        throw ParseError(lineno, "expected 'vertices <n>'");
      try {
        doc.vertex_count = std::stoi(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "expected a vertex count, got '" + tok[1] + "'");
      }
      if (doc.vertex_count < 0) throw ParseError(lineno, "vertex count must be nonnegative");
      stage = 2;
      continue;
    }
    EdgeDecl d;
    d.line = lineno;
    if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <v> <w> <+|->'");
      d.type = EdgeDecl::Type::Link;
      d.v = parse_vertex(tok[1], doc.vertex_count, lineno);
      d.w = parse_vertex(tok[2], doc.vertex_count, lineno);
      d.sign = parse_sign(tok[3], lineno);
      if (d.v == d.w)
        throw ParseError(lineno, "edge endpoints must differ; use 'loop' for a loop");
    } else if (tok[0] == "loop") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'loop <v> <+|->'");
      d.type = EdgeDecl::Type::Loop;
      d.v = parse_vertex(tok[1], doc.vertex_count, lineno);
      d.sign = parse_sign(tok[2], lineno);
    } else if (tok[0] == "halfedge") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'halfedge <v>'");
      d.type = EdgeDecl::Type::Halfedge;
      d.v = parse_vertex(tok[1], doc.vertex_count, lineno);
    } else if (tok[0] == "loose") {
      throw ParseError(lineno, "loose edges cannot be declared; they only arise internally");
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
    if (doc.mode == GraphMode::Unsigned) {
      if (d.type == EdgeDecl::Type::Halfedge)
        throw ParseError(lineno, "halfedges are not allowed in unsigned graphs");
      if (d.sign < 0) throw ParseError(lineno, "negative signs are not allowed in unsigned graphs");
    }
    doc.edges.push_back(d);
  }
  if (stage == 0) throw ParseError(lineno, "missing 'signed' or 'unsigned' header");
  if (stage == 1) throw ParseError(lineno, "missing 'vertices <n>' line");
  return doc;
}

std::string render_graph_text(const GraphDocument& doc) {
  std::ostringstream out;
  out << (doc.mode == GraphMode::Signed ? "signed" : "unsigned") << '\n';
  out << "vertices " << doc.vertex_count << '\n';
  for (const EdgeDecl& d : doc.edges) {
    switch (d.type) {
      case EdgeDecl::Type::Link:
        out << "edge " << d.v << ' ' << d.w << ' ' << (d.sign > 0 ? '+' : '-') << '\n';
        break;
      case EdgeDecl::Type::Loop:
        out << "loop " << d.v << ' ' << (d.sign > 0 ? '+' : '-') << '\n';
        break;
      case EdgeDecl::Type::Halfedge:
        out << "halfedge " << d.v << '\n';
        break;
    }
  }
  return out.str();
}

SignedGraph to_graph(const GraphDocument& doc) {
  SignedGraph g(doc.mode, doc.vertex_count);
  for (const EdgeDecl& d : doc.edges) {
    switch (d.type) {
      case EdgeDecl::Type::Link:
        g.add_link(d.v - 1, d.w - 1, d.sign);
        break;
      case EdgeDecl::Type::Loop:
        g.add_loop(d.v - 1, d.sign);
        break;
      case EdgeDecl::Type::Halfedge:
        g.add_halfedge(d.v - 1);
        break;
    }
  }
  return g;
}

}  // namespace sgchrom
