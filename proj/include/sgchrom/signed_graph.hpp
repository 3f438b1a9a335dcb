#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgchrom {

enum class GraphMode : std::uint8_t { Signed, Unsigned };

// Edge kinds of a signed multigraph. Loose edges have no endpoints; they only
// arise from contracting a halfedge or negative loop away from under another
// loop or halfedge, and admit no proper coloring.
enum class EdgeKind : std::uint8_t { Link, Loop, Halfedge, Loose };

struct Edge {
  EdgeKind kind = EdgeKind::Loose;
  int v = -1;  // Link: smaller endpoint; Loop/Halfedge: the vertex
  int w = -1;  // Link: larger endpoint; otherwise -1
  int sign = +1;  // Link/Loop only; halfedges and loose edges carry no sign

  bool incident_to(int u) const { return v == u || w == u; }
  bool operator==(const Edge&) const = default;
};

// Vertex-labelled signed multigraph. Vertices are dense indices 0..n-1; labels
// remember the 1-based names from input files across deletions/contractions.
// All operations below are pure: they return new graphs.
class SignedGraph {
 public:
  SignedGraph() : SignedGraph(GraphMode::Signed, 0) {}
  SignedGraph(GraphMode mode, int vertex_count);
  SignedGraph(GraphMode mode, int vertex_count, std::vector<int> labels);

  void add_link(int v, int w, int sign);
  void add_loop(int v, int sign);
  void add_halfedge(int v);
  void add_loose();
  void add_edge(const Edge& e);

  GraphMode mode() const { return mode_; }
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int v) const;

  bool has_loose_edge() const;
  bool has_halfedge() const;
  bool links_only() const;  // every edge is a link

  bool operator==(const SignedGraph&) const = default;

 private:
  GraphMode mode_;
  int n_;
  std::vector<int> labels_;
  std::vector<Edge> edges_;

  void check_vertex(int v, const char* what) const;
};

// Vertex sign assignment, one of +1/-1 per vertex.
using Switching = std::vector<int>;

SignedGraph delete_edge(const SignedGraph& g, int edge_id);
// Removes the vertex together with every incident edge (loose edges survive).
SignedGraph delete_vertex(const SignedGraph& g, int v);
// Removes all vertices in `removed` and their incident edges.
SignedGraph induced_delete(const SignedGraph& g, const std::vector<int>& removed);
// sigma'_vw = s_v * sigma_vw * s_w; loops, halfedges, loose edges unchanged.
SignedGraph switch_signs(const SignedGraph& g, const Switching& s);
// Flips the sign of every link and loop.
SignedGraph negate(const SignedGraph& g);

struct Contraction {
  SignedGraph graph;
  // New index of the vertex the edge contracted to; empty for halfedge and
  // negative-loop contractions, which delete the vertex.
  std::optional<int> merged_vertex;
};

// Link: switch so the edge is positive, then identify the endpoints (parallel
// links become loops, carrying their switched signs). Positive loop: same as
// deleting the edge. Negative loop / halfedge at v: delete the edge and v;
// links at v become halfedges at their other endpoint, remaining loops and
// halfedges at v become loose edges. Loose edges are not contractible.
Contraction contract_edge_tracked(const SignedGraph& g, int edge_id);
SignedGraph contract_edge(const SignedGraph& g, int edge_id);

// Connected components. Isolated vertices count; each loose edge forms its
// own vertexless component, appended after the vertex components (which are
// ordered by smallest vertex index).
std::vector<SignedGraph> components(const SignedGraph& g);
int component_count(const SignedGraph& g);

// A component is balanced iff it has no halfedge and some vertex sign
// assignment s satisfies s_v s_w = sigma_vw for all its links and loops (so a
// negative loop, or any negative cycle, is disqualifying). Loose-edge
// components are neither balanced nor antibalanced.
std::vector<bool> balanced_components(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);
// Antibalanced iff the negation is balanced.
bool is_antibalanced(const SignedGraph& g);

// Stable structural key: equal keys imply equal mode, vertex count and edge
// multiset (edge ids and labels are ignored). No isomorphism or switching
// reduction is attempted.
std::string canonical_key(const SignedGraph& g);

}  // namespace sgchrom
