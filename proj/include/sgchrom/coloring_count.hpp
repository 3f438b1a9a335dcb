#pragma once

#include <vector>

#include "sgchrom/bivar_poly.hpp"
#include "sgchrom/integer.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgchrom {

// Color palettes for (k,l)-colorings with span = k+l:
//   SignedRange:  {-span, ..., +span}            (signed graphs)
//   ZeroFree:     the same without 0             (signed graphs)
//   Unsigned:     {1, ..., span}                 (unsigned graphs)
enum class ColorRange : std::uint8_t { SignedRange, ZeroFree, Unsigned };

struct Coloring {
  std::vector<int> values;  // per vertex, in index order
  ColorRange range = ColorRange::SignedRange;
  int span = 0;  // k + l
};

// Propriety of a coloring. Signed graphs: a link vw is satisfied when
// x_v != sigma*x_w or |x_v| = |x_w| > k; a positive loop needs |x_v| > k, a
// negative loop and a halfedge need x_v != 0; a loose edge never passes.
// Unsigned graphs: an edge needs x_v != x_w or x_v = x_w > k; a loop needs
// x_v > k. Colors outside the declared range are an error, as is a range tag
// that does not fit the graph mode.
bool is_proper(const SignedGraph& g, const Coloring& x, int k);

// Brute-force counts of proper (k,l)-colorings over the respective palettes.
// The empty graph counts 1. `jobs` may split the enumeration over the first
// vertex's colors; the result is independent of it.
Integer count_signed(const SignedGraph& g, int k, int l, int jobs = 1);
Integer count_zero_free(const SignedGraph& g, int k, int l, int jobs = 1);
Integer count_unsigned(const SignedGraph& g, int k, int l, int jobs = 1);

// Independence polynomial: sum over independent vertex sets W (no link joins
// two members; loops and halfedges are ignored) of x^{|V|-|W|}. Univariate in
// the first variable slot.
BivarPoly independence_poly(const SignedGraph& g);

// Antibalance polynomial: sum over W subset of V with G-W antibalanced of
// x^{|V|-|W|} * y^{c(G-W)}; the W=V term contributes 1. Variables map to the
// (first, second) slots.
BivarPoly antibalance_poly(const SignedGraph& g);

}  // namespace sgchrom
