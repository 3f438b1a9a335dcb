#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "sgchrom/signed_graph.hpp"

using namespace sgchrom;

namespace {

SignedGraph triangle(int s01, int s12, int s02) {
  SignedGraph g(GraphMode::Signed, 3);
  g.add_link(0, 1, s01);
  g.add_link(1, 2, s12);
  g.add_link(0, 2, s02);
  return g;
}

}  // namespace

TEST_CASE("construction validates endpoints and mode") {
  SignedGraph g(GraphMode::Signed, 2);
  CHECK_THROWS_AS(g.add_link(0, 0, +1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_link(0, 2, +1), std::out_of_range);
  CHECK_THROWS_AS(g.add_loop(-1, +1), std::out_of_range);

  SignedGraph u(GraphMode::Unsigned, 2);
  CHECK_THROWS_AS(u.add_link(0, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(u.add_loop(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(u.add_halfedge(0), std::invalid_argument);
  u.add_link(0, 1, +1);
  CHECK(u.edge_count() == 1);
}

TEST_CASE("links normalize to v < w") {
  SignedGraph g(GraphMode::Signed, 3);
  g.add_link(2, 0, -1);
  CHECK(g.edge(0).v == 0);
  CHECK(g.edge(0).w == 2);
  CHECK(g.edge(0).sign == -1);
  CHECK(g.edge(0).incident_to(2));
  CHECK_FALSE(g.edge(0).incident_to(1));
}

TEST_CASE("vertex deletion drops incident edges and keeps labels") {
  SignedGraph g(GraphMode::Signed, 3);
  g.add_link(0, 1, +1);
  g.add_link(1, 2, -1);
  g.add_halfedge(0);
  const SignedGraph h = delete_vertex(g, 0);
  CHECK(h.vertex_count() == 2);
  REQUIRE(h.edge_count() == 1);
  CHECK(h.edge(0).kind == EdgeKind::Link);
  CHECK(h.edge(0).v == 0);
  CHECK(h.edge(0).w == 1);
  CHECK(h.labels() == std::vector<int>{2, 3});
}

TEST_CASE("induced deletion removes several vertices at once") {
  SignedGraph g = triangle(+1, +1, +1);
  const SignedGraph h = induced_delete(g, {0, 2});
  CHECK(h.vertex_count() == 1);
  CHECK(h.edge_count() == 0);
  CHECK(h.labels() == std::vector<int>{2});
}

TEST_CASE("contracting a positive link merges endpoints") {
  SignedGraph g(GraphMode::Signed, 2);
  g.add_link(0, 1, +1);
  g.add_link(0, 1, +1);
  const Contraction c = contract_edge_tracked(g, 0);
  CHECK(c.merged_vertex == 0);
  CHECK(c.graph.vertex_count() == 1);
  REQUIRE(c.graph.edge_count() == 1);
  CHECK(c.graph.edge(0).kind == EdgeKind::Loop);
  CHECK(c.graph.edge(0).sign == +1);
}

TEST_CASE("contracting a negative link switches before merging") {
  SignedGraph g(GraphMode::Signed, 3);
  g.add_link(0, 1, -1);
  g.add_link(1, 2, +1);
  const SignedGraph h = contract_edge(g, 0);
  CHECK(h.vertex_count() == 2);
  REQUIRE(h.edge_count() == 1);
  CHECK(h.edge(0).kind == EdgeKind::Link);
  // The switch at the absorbed endpoint flips the neighboring link.
  CHECK(h.edge(0).sign == -1);

  SignedGraph d(GraphMode::Signed, 2);
  d.add_link(0, 1, +1);
  d.add_link(0, 1, -1);
  const SignedGraph e = contract_edge(d, 1);
  REQUIRE(e.edge_count() == 1);
  CHECK(e.edge(0).kind == EdgeKind::Loop);
  // Parallel (+) seen through the (-) contraction becomes a negative loop.
  CHECK(e.edge(0).sign == -1);
}

TEST_CASE("contracting a positive loop only deletes the edge") {
  SignedGraph g(GraphMode::Signed, 1);
  g.add_loop(0, +1);
  g.add_halfedge(0);
  const Contraction c = contract_edge_tracked(g, 0);
  CHECK(c.merged_vertex == 0);
  CHECK(c.graph.vertex_count() == 1);
  REQUIRE(c.graph.edge_count() == 1);
  CHECK(c.graph.edge(0).kind == EdgeKind::Halfedge);
}

TEST_CASE("contracting a halfedge deletes its vertex") {
  SignedGraph g(GraphMode::Signed, 2);
  g.add_halfedge(1);
  g.add_link(0, 1, -1);
  g.add_loop(1, +1);
  g.add_halfedge(1);
  const Contraction c = contract_edge_tracked(g, 0);
  CHECK_FALSE(c.merged_vertex.has_value());
  CHECK(c.graph.vertex_count() == 1);
  REQUIRE(c.graph.edge_count() == 3);
  CHECK(c.graph.edge(0).kind == EdgeKind::Halfedge);  // the link, pulled to vertex 0
  CHECK(c.graph.edge(0).v == 0);
  CHECK(c.graph.edge(1).kind == EdgeKind::Loose);
  CHECK(c.graph.edge(2).kind == EdgeKind::Loose);
}

TEST_CASE("negative loops contract like halfedges") {
  SignedGraph g(GraphMode::Signed, 2);
  g.add_loop(0, -1);
  g.add_link(0, 1, +1);
  const Contraction c = contract_edge_tracked(g, 0);
  CHECK_FALSE(c.merged_vertex.has_value());
  CHECK(c.graph.vertex_count() == 1);
  REQUIRE(c.graph.edge_count() == 1);
  CHECK(c.graph.edge(0).kind == EdgeKind::Halfedge);
}

TEST_CASE("loose edges cannot be contracted") {
  SignedGraph g(GraphMode::Signed, 0);
  g.add_loose();
  CHECK_THROWS_AS(contract_edge(g, 0), std::invalid_argument);
}

TEST_CASE("components split vertices and loose edges") {
  SignedGraph g(GraphMode::Signed, 3);
  g.add_link(0, 2, +1);
  g.add_loose();
  CHECK(component_count(g) == 3);
  const auto parts = components(g);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].vertex_count() == 2);
  CHECK(parts[1].vertex_count() == 1);
  CHECK(parts[2].vertex_count() == 0);
  CHECK(parts[2].has_loose_edge());
}

TEST_CASE("balance follows cycle signs, halfedges and negative loops") {
  CHECK(is_balanced(triangle(-1, -1, +1)));
  CHECK_FALSE(is_balanced(triangle(-1, +1, +1)));
  CHECK(is_antibalanced(triangle(-1, -1, -1)));
  CHECK_FALSE(is_antibalanced(triangle(+1, +1, +1)));

  SignedGraph h(GraphMode::Signed, 1);
  h.add_halfedge(0);
  CHECK_FALSE(is_balanced(h));
  CHECK_FALSE(is_antibalanced(h));

  SignedGraph nl(GraphMode::Signed, 1);
  nl.add_loop(0, -1);
  CHECK_FALSE(is_balanced(nl));
  CHECK(is_antibalanced(nl));  // negation turns it into a positive loop

  SignedGraph loose(GraphMode::Signed, 0);
  loose.add_loose();
  CHECK_FALSE(is_balanced(loose));

  SignedGraph e(GraphMode::Signed, 0);
  CHECK(is_balanced(e));
  CHECK(is_antibalanced(e));
}

TEST_CASE("switching flips link signs across the cut") {
  SignedGraph g = triangle(-1, +1, +1);
  g.add_loop(0, -1);
  g.add_halfedge(1);
  const SignedGraph h = switch_signs(g, {-1, +1, +1});
  CHECK(h.edge(0).sign == +1);  // 01 crossed the cut
  CHECK(h.edge(1).sign == +1);  // 12 untouched
  CHECK(h.edge(2).sign == -1);  // 02 crossed
  CHECK(h.edge(3).sign == -1);  // loops never switch
  CHECK(h.edge(4).kind == EdgeKind::Halfedge);
  CHECK(is_balanced(g) == is_balanced(h));
  CHECK_THROWS_AS(switch_signs(g, {1, 1}), std::invalid_argument);
}

TEST_CASE("negation flips links and loops but not halfedges") {
  SignedGraph g(GraphMode::Signed, 2);
  g.add_link(0, 1, +1);
  g.add_loop(0, -1);
  g.add_halfedge(1);
  const SignedGraph h = negate(g);
  CHECK(h.edge(0).sign == -1);
  CHECK(h.edge(1).sign == +1);
  CHECK(h.edge(2).kind == EdgeKind::Halfedge);
}

TEST_CASE("canonical keys ignore edge order and labels") {
  SignedGraph a(GraphMode::Signed, 2);
  a.add_halfedge(1);
  a.add_link(0, 1, -1);
  SignedGraph b(GraphMode::Signed, 2, {7, 9});
  b.add_link(0, 1, -1);
  b.add_halfedge(1);
  CHECK(canonical_key(a) == canonical_key(b));

  SignedGraph c(GraphMode::Signed, 2);
  c.add_halfedge(1);
  c.add_link(0, 1, +1);
  CHECK(canonical_key(a) != canonical_key(c));

  SignedGraph u(GraphMode::Unsigned, 2);
  u.add_link(0, 1, +1);
  SignedGraph s(GraphMode::Signed, 2);
  s.add_link(0, 1, +1);
  CHECK(canonical_key(u) != canonical_key(s));
}
