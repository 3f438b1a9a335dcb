#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "sgchrom/bivar_poly.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgchrom {

// Variable conventions carried by every produced polynomial:
//   Signed:   lambda = 2k+1, mu = 2l
//   ZeroFree: lambda = 2k,   mu = 2l
//   Unsigned: lambda = k,    mu = l
enum class Convention : std::uint8_t { Signed, ZeroFree, Unsigned };

enum class Provenance : std::uint8_t { DeletionContraction, SubsetExpansion, Interpolation };

struct PolyResult {
  BivarPoly poly;
  Convention convention = Convention::Signed;
  Provenance provenance = Provenance::DeletionContraction;
};

const char* convention_name(Convention c);

// Shared polynomial cache keyed by (computation, convention, canonical graph
// key). Linearizable: a single mutex guards the map. A cap of 0 disables
// storage entirely; with any cap, overflow simply falls back to recomputation.
class Memo {
 public:
  Memo() = default;
  explicit Memo(std::size_t cap) : cap_(cap) {}

  std::optional<BivarPoly> get(const std::string& key) const;
  void put(const std::string& key, const BivarPoly& value);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::optional<std::size_t> cap_;
  std::unordered_map<std::string, BivarPoly> map_;
};

// Bivariate chromatic polynomial via deletion-contraction. Base case: n
// isolated vertices give (lambda+mu)^n; a loose edge kills the count. Edge
// choice: links first, then positive loops, then halfedges and negative
// loops, lowest id first. For a halfedge or negative loop e the recurrence is
// P(G) = P(G-e) - P(G/e); for every other edge
// P(G) = P(G-e) - P(G/e) + mu * P((G/e) - v) with v the contracted vertex.
// The zero-free variant replaces the halfedge/negative-loop rule by
// P*(G) = P*(G-e) since those constraints are vacuous without color zero.
PolyResult poly_signed_dc(const SignedGraph& g, Memo* memo = nullptr);
PolyResult poly_zero_free_dc(const SignedGraph& g, Memo* memo = nullptr);
// Unsigned graphs only; loops contract by deletion. Halfedges are an error.
PolyResult poly_unsigned_dc(const SignedGraph& g, Memo* memo = nullptr);

// The mu = 0 specialization computed by its own univariate recursion (the
// classical signed / zero-free / unsigned chromatic polynomial in lambda).
BivarPoly chromatic_l0(const SignedGraph& g, Convention conv, Memo* memo = nullptr);

// Balanced-expansion route: P(lambda, mu) = sum over vertex subsets W of
// mu^{|W|} * Z_{G-W}(lambda) with Z the matching l=0 chromatic polynomial.
PolyResult poly_signed_subset(const SignedGraph& g, Memo* memo = nullptr);
PolyResult poly_zero_free_subset(const SignedGraph& g, Memo* memo = nullptr);
PolyResult poly_unsigned_subset(const SignedGraph& g, Memo* memo = nullptr);

// Independent oracle route: brute-force counts on the full
// (n+1) x (n+1) evaluation grid of the convention, then exact tensor
// Lagrange interpolation.
PolyResult poly_interpolated(const SignedGraph& g, Convention conv, int jobs = 1);

// Evaluates at integer (k, l) after the convention's affine substitution.
Integer eval_at_kl(const PolyResult& p, const Integer& k, const Integer& l);

// Test hook: same recursion with an arbitrary edge choice; no memoization.
using EdgeSelector = std::function<int(const SignedGraph&)>;
BivarPoly dc_with_selector(const SignedGraph& g, Convention conv, const EdgeSelector& pick);

}  // namespace sgchrom
