#pragma once

#include <string>
#include <vector>

#include "sgchrom/chromatic.hpp"
#include "sgchrom/signed_graph.hpp"

namespace sgchrom {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // failure explanation, or a note on what was skipped
};

// Individual cross-checks. Each computes the same quantity along two
// independent routes and compares. They throw std::invalid_argument when the
// graph does not fit the check (wrong mode, needs link-only, too large).

// dc, subset expansion and (for small graphs) interpolation give one polynomial.
CheckResult check_three_way(const SignedGraph& g, Convention conv, Memo* memo = nullptr,
                            int jobs = 1);

// Evaluating the dc polynomial matches brute-force counting on a (k,l) grid.
CheckResult check_oracle_grid(const SignedGraph& g, Convention conv, int kmax, int lmax,
                              Memo* memo = nullptr, int jobs = 1);

// d/dmu of the polynomial equals the sum over single-vertex deletions.
// Signed and ZeroFree conventions.
CheckResult check_derivative_identity(const SignedGraph& g, Convention conv,
                                      Memo* memo = nullptr);

// The zero-free polynomial at lambda=2 equals the generating function of
// vertex subsets whose deletion leaves an antibalanced graph, weighted
// 2^(number of components). Halfedges are struck before the antibalance test;
// they cannot affect the colorings this slice counts.
CheckResult check_antibalance_identity(const SignedGraph& g, Memo* memo = nullptr);

// The signed polynomial at lambda=1 equals the independence polynomial in mu.
// Link-only graphs.
CheckResult check_independence_identity(const SignedGraph& g, Memo* memo = nullptr);

// Switching leaves counts and both signed polynomials unchanged.
CheckResult check_switching_invariance(const SignedGraph& g, const Switching& s, int kmax,
                                       int lmax, Memo* memo = nullptr);

// Evaluation at negated arguments counts colorings weighted by compatible
// acyclic orientations, over k in 1..kmax, l in 0..lmax, plus the classic
// acyclic-orientation count at (k,l)=(1,0). Link-only graphs.
CheckResult check_reciprocity_suite(const SignedGraph& g, int kmax, int lmax,
                                    Memo* memo = nullptr);

// The mu=0 slice of the dc polynomial equals the dedicated one-variable
// recursion and matches l=0 counts pointwise.
CheckResult check_l0_slice(const SignedGraph& g, Convention conv, int kmax,
                           Memo* memo = nullptr);

struct VerifyOptions {
  int kmax = 3;
  int lmax = 3;
  int jobs = 1;
  unsigned seed = 1;   // drives the switchings tried
  int switchings = 3;  // random switchings per graph
};

// Composes the checks that apply to the graph's mode and shape. Checks that
// would be intractable at this size are reported as passes with a note.
std::vector<CheckResult> run_identity_suite(const SignedGraph& g, const VerifyOptions& opt = {});

}  // namespace sgchrom
