#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/integer.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgchrom {

// Bidirected orientation: one incidence value eta = +-1 per edge end, with
// sigma_e = -eta_ve * eta_we for links and loops (+1 means the arrow points
// into the vertex). eta[i][0] belongs to edge i's first stored endpoint,
// eta[i][1] to the second; a halfedge uses only slot 0. Unsigned graphs have
// all-positive signs, so exactly one end of each edge is the head.
struct Orientation {
  std::vector<std::array<std::int8_t, 2>> eta;
};

// All 2^|E| orientations, in a fixed deterministic order. Loose edges are an
// error (they have no ends to orient).
std::vector<Orientation> enumerate_orientations(const SignedGraph& g);

// One simple cycle of the underlying multigraph, as the pair of cycle-edge
// ends meeting at each cycle vertex.
struct CycleCorner {
  int edge_a;
  int end_a;
  int edge_b;
  int end_b;
};
using Cycle = std::vector<CycleCorner>;

// Exhaustive simple-cycle enumeration (edge subsets in which every touched
// vertex has degree two and which are connected). Requires a link-only graph.
std::vector<Cycle> simple_cycles(const SignedGraph& g);

// An orientation is acyclic when some coloring satisfies every edge
// constraint strictly. Equivalently: repeatedly deleting vertices whose
// remaining edge ends all point the same way consumes every edge. A leftover
// kernel is a coherently traversable closed walk without sources or sinks;
// two unbalanced cycles meeting at a vertex can form one even though neither
// cycle alone can be coherent, so testing simple cycles is not enough.
// Link-only graphs; loops and halfedges are an error.
bool is_acyclic(const SignedGraph& g, const Orientation& o);
Integer count_acyclic(const SignedGraph& g);

// Compatibility with an integer coloring: every link needs
// eta_ve*x_v + eta_we*x_w >= 0; every halfedge and negative loop needs
// eta_ve*x_v >= 0; positive loops impose nothing.
bool is_compatible(const SignedGraph& g, const Orientation& o, const std::vector<int>& x);

// Right-hand side of the reciprocity identities: sum over all colorings of
// the full palette of weight(x), where weight(x) is the number of compatible
// acyclic orientations of the subgraph induced on the vertices colored inside
// the inner cube (|x_v| <= k, or x_v <= k unsigned). A coloring entirely
// inside the cube is weighed on the whole graph; one entirely outside weighs
// 1 through the empty subgraph. Vertices colored outside the cube can meet no
// constraint, which is why they drop out of the orientation count.
struct MultiplicityReport {
  Integer total = 0;
  Integer outside_cube = 0;        // weight carried by colorings leaving the cube
  Integer inside_cube_weight = 0;  // summed multiplicities of inner-cube colorings
  // Inner-cube colorings with their multiplicities, in enumeration order.
  std::vector<std::pair<std::vector<int>, Integer>> inner;
};

MultiplicityReport reciprocity_rhs_signed(const SignedGraph& g, int k, int l);
MultiplicityReport reciprocity_rhs_unsigned(const SignedGraph& g, int k, int l);

// Compares (-1)^|V| P(negated arguments) against the orientation count:
// signed graphs evaluate P at (-(2k+1), -2l), unsigned at (-k, -l).
// Requires k >= 1 and a link-only graph.
struct ReciprocityVerdict {
  Integer lhs = 0;
  Integer rhs = 0;
  bool pass = false;
  MultiplicityReport report;
};

ReciprocityVerdict check_reciprocity(const SignedGraph& g, int k, int l, Memo* memo = nullptr);

// l = 0 specializations at -1: (-1)^|V| P(-1, 0) must equal the number of
// acyclic orientations (signed and unsigned chromatic reciprocity).
struct SpecialVerdict {
  Integer lhs = 0;
  Integer acyclic = 0;
  bool pass = false;
};

SpecialVerdict zaslavsky_special(const SignedGraph& g, Memo* memo = nullptr);
SpecialVerdict unsigned_acyclic_special(const SignedGraph& g, Memo* memo = nullptr);

}  // namespace sgchrom
