#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/coloring_count.hpp"

using namespace sgchrom;

namespace {

const BivarPoly lam = BivarPoly::lambda();
const BivarPoly mu = BivarPoly::mu();
const BivarPoly one = BivarPoly::constant(1);

SignedGraph path_with_halfedge() {
  SignedGraph g(GraphMode::Signed, 3);
  g.add_link(0, 1, -1);
  g.add_link(1, 2, +1);
  g.add_halfedge(2);
  return g;
}

SignedGraph mixed_triangle() {
  SignedGraph g(GraphMode::Signed, 3);
  g.add_link(0, 1, -1);
  g.add_link(1, 2, -1);
  g.add_link(0, 2, +1);
  return g;
}

}  // namespace

TEST_CASE("base cases") {
  CHECK(poly_signed_dc(SignedGraph(GraphMode::Signed, 2)).poly == pow(lam + mu, 2));
  CHECK(poly_unsigned_dc(SignedGraph(GraphMode::Unsigned, 1)).poly == lam + mu);

  SignedGraph loose(GraphMode::Signed, 1);
  loose.add_loose();
  CHECK(poly_signed_dc(loose).poly.is_zero());
}

TEST_CASE("one-edge polynomials") {
  SignedGraph pos_loop(GraphMode::Signed, 1);
  pos_loop.add_loop(0, +1);
  CHECK(poly_signed_dc(pos_loop).poly == mu);

  SignedGraph neg_loop(GraphMode::Signed, 1);
  neg_loop.add_loop(0, -1);
  CHECK(poly_signed_dc(neg_loop).poly == lam + mu - one);

  SignedGraph half(GraphMode::Signed, 1);
  half.add_halfedge(0);
  CHECK(poly_signed_dc(half).poly == lam + mu - one);
  // Zero-free, the halfedge binds nothing.
  CHECK(poly_zero_free_dc(half).poly == lam + mu);

  SignedGraph u(GraphMode::Unsigned, 2);
  u.add_link(0, 1, +1);
  CHECK(poly_unsigned_dc(u).poly == pow(lam + mu, 2) - lam);
}

TEST_CASE("result metadata") {
  const PolyResult r = poly_zero_free_dc(SignedGraph(GraphMode::Signed, 1));
  CHECK(r.convention == Convention::ZeroFree);
  CHECK(r.provenance == Provenance::DeletionContraction);
  CHECK(eval_at_kl(r, 2, 1) == 6);  // lambda = 2k, mu = 2l
  CHECK(eval_at_kl(poly_signed_dc(SignedGraph(GraphMode::Signed, 1)), 2, 1) == 7);
}

TEST_CASE("path with halfedge matches its expanded form") {
  const BivarPoly inner1 = mu * (mu + lam) + lam * (mu + lam - one);
  const BivarPoly inner2 = mu * (mu + lam) + (lam - one) * (mu + lam - one);
  CHECK(poly_signed_dc(path_with_halfedge()).poly == mu * inner1 + (lam - one) * inner2);
}

TEST_CASE("mixed triangle satisfies the three-term recurrence") {
  const SignedGraph g = mixed_triangle();
  const BivarPoly whole = mu * (mu * (mu + lam) + lam * (mu + lam - one)) +
                          lam * (mu * (mu + lam - one) + (lam - one) * (mu + lam - BivarPoly::constant(2)));
  CHECK(poly_signed_dc(g).poly == whole);

  // Deletion, contraction and vertex-deleted contraction of the solid edge.
  const int e = 2;
  const BivarPoly del = poly_signed_dc(delete_edge(g, e)).poly;
  CHECK(del == mu * (mu * (mu + lam) + lam * (mu + lam - one)) +
                   lam * (mu * (mu + lam) + (lam - one) * (mu + lam - one)));
  const Contraction con = contract_edge_tracked(g, e);
  const BivarPoly ctr = poly_signed_dc(con.graph).poly;
  CHECK(ctr == mu * (mu + lam) + lam * (mu + lam - one));
  REQUIRE(con.merged_vertex.has_value());
  const BivarPoly rest = poly_signed_dc(delete_vertex(con.graph, *con.merged_vertex)).poly;
  CHECK(rest == mu + lam);
  CHECK(poly_signed_dc(g).poly == del - ctr + mu * rest);
}

TEST_CASE("three computation routes agree") {
  for (const SignedGraph& g : {path_with_halfedge(), mixed_triangle()}) {
    const BivarPoly dc = poly_signed_dc(g).poly;
    CHECK(dc == poly_signed_subset(g).poly);
    CHECK(dc == poly_interpolated(g, Convention::Signed).poly);
    const BivarPoly zf = poly_zero_free_dc(g).poly;
    CHECK(zf == poly_zero_free_subset(g).poly);
    CHECK(zf == poly_interpolated(g, Convention::ZeroFree).poly);
  }
  SignedGraph u(GraphMode::Unsigned, 3);
  u.add_link(0, 1, +1);
  u.add_loop(2, +1);
  const BivarPoly dc = poly_unsigned_dc(u).poly;
  CHECK(dc == poly_unsigned_subset(u).poly);
  CHECK(dc == poly_interpolated(u, Convention::Unsigned).poly);
}

TEST_CASE("memoization is transparent") {
  const SignedGraph g = mixed_triangle();
  const BivarPoly bare = poly_signed_dc(g).poly;

  Memo memo;
  CHECK(poly_signed_dc(g, &memo).poly == bare);
  CHECK(memo.size() > 0);
  CHECK(poly_signed_dc(g, &memo).poly == bare);  // cache hit path

  Memo off(0);
  CHECK(poly_signed_dc(g, &off).poly == bare);
  CHECK(off.size() == 0);

  Memo tiny(2);
  CHECK(poly_signed_dc(g, &tiny).poly == bare);
  CHECK(tiny.size() <= 2);

  // Signed and zero-free subproblems may not collide in a shared memo.
  Memo shared;
  const BivarPoly s = poly_signed_dc(path_with_halfedge(), &shared).poly;
  const BivarPoly z = poly_zero_free_dc(path_with_halfedge(), &shared).poly;
  CHECK(s == poly_signed_dc(path_with_halfedge()).poly);
  CHECK(z == poly_zero_free_dc(path_with_halfedge()).poly);
  CHECK(s != z);
}

TEST_CASE("edge selection order does not matter") {
  std::mt19937 rng(11);
  for (const SignedGraph& g : {path_with_halfedge(), mixed_triangle()}) {
    const BivarPoly fixed = poly_signed_dc(g).poly;
    for (int trial = 0; trial < 8; ++trial) {
      const BivarPoly p = dc_with_selector(g, Convention::Signed, [&](const SignedGraph& h) {
        return static_cast<int>(rng() % static_cast<unsigned>(h.edge_count()));
      });
      CHECK(p == fixed);
    }
  }
}

TEST_CASE("mu=0 slice equals the one-variable recursion") {
  for (const SignedGraph& g : {path_with_halfedge(), mixed_triangle()}) {
    CHECK(chromatic_l0(g, Convention::Signed) == poly_signed_dc(g).poly.substitute_mu(0));
    CHECK(chromatic_l0(g, Convention::ZeroFree) ==
          poly_zero_free_dc(g).poly.substitute_mu(0));
  }
}

TEST_CASE("mode mismatches are rejected") {
  CHECK_THROWS_AS(poly_signed_dc(SignedGraph(GraphMode::Unsigned, 1)), std::invalid_argument);
  CHECK_THROWS_AS(poly_unsigned_dc(SignedGraph(GraphMode::Signed, 1)), std::invalid_argument);
}
