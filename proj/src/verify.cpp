#include "sgchrom/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sgchrom/coloring_count.hpp"
#include "sgchrom/orientation.hpp"

namespace sgchrom {

namespace {

PolyResult poly_for(const SignedGraph& g, Convention conv, Memo* memo) {
  switch (conv) {
    case Convention::Signed: return poly_signed_dc(g, memo);
    case Convention::ZeroFree: return poly_zero_free_dc(g, memo);
    case Convention::Unsigned: return poly_unsigned_dc(g, memo);
  }
  throw std::logic_error("unreachable");
}

PolyResult subset_for(const SignedGraph& g, Convention conv) {
  switch (conv) {
    case Convention::Signed: return poly_signed_subset(g);
    case Convention::ZeroFree: return poly_zero_free_subset(g);
    case Convention::Unsigned: return poly_unsigned_subset(g);
  }
  throw std::logic_error("unreachable");
}

Integer count_for(const SignedGraph& g, Convention conv, int k, int l, int jobs) {
  switch (conv) {
    case Convention::Signed: return count_signed(g, k, l, jobs);
    case Convention::ZeroFree: return count_zero_free(g, k, l, jobs);
    case Convention::Unsigned: return count_unsigned(g, k, l, jobs);
  }
  throw std::logic_error("unreachable");
}

// Palette size at span s, per convention.
double palette_size(Convention conv, int span) {
  switch (conv) {
    case Convention::Signed: return 2.0 * span + 1.0;
    case Convention::ZeroFree: return 2.0 * span;
    case Convention::Unsigned: return span;
  }
  return 0.0;
}

SignedGraph strip_halfedges(const SignedGraph& g) {
  SignedGraph out(g.mode(), g.vertex_count());
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Link: out.add_link(e.v, e.w, e.sign); break;
      case EdgeKind::Loop: out.add_loop(e.v, e.sign); break;
      case EdgeKind::Halfedge: break;
      case EdgeKind::Loose: out.add_loose(); break;
    }
  }
  return out;
}

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

CheckResult ok(std::string name, std::string detail = {}) {
  return CheckResult{std::move(name), true, std::move(detail)};
}

std::string with_conv(const char* base, Convention conv) {
  return std::string(base) + " (" + convention_name(conv) + ")";
}

}  // namespace

CheckResult check_three_way(const SignedGraph& g, Convention conv, Memo* memo, int jobs) {
  std::string name = with_conv("method agreement", conv);
  if (g.vertex_count() > 20)
    throw std::invalid_argument("method agreement check needs at most 20 vertices");
  const BivarPoly dc = poly_for(g, conv, memo).poly;
  const BivarPoly sub = subset_for(g, conv).poly;
  if (dc != sub)
    return fail(name, "deletion-contraction " + to_string(dc) + " vs subset expansion " +
                          to_string(sub));
  const int n = g.vertex_count();
  const double cell = std::pow(palette_size(conv, 2 * n), n);
  if (cell * (n + 1.0) * (n + 1.0) > 5e7)
    return ok(name, "interpolation skipped at this size");
  const BivarPoly interp = poly_interpolated(g, conv, jobs).poly;
  if (dc != interp)
    return fail(name,
                "deletion-contraction " + to_string(dc) + " vs interpolation " + to_string(interp));
  return ok(name);
}

CheckResult check_oracle_grid(const SignedGraph& g, Convention conv, int kmax, int lmax,
                              Memo* memo, int jobs) {
  std::string name = with_conv("brute-force agreement", conv);
  const PolyResult p = poly_for(g, conv, memo);
  for (int k = 0; k <= kmax; ++k) {
    for (int l = 0; l <= lmax; ++l) {
      const Integer lhs = eval_at_kl(p, k, l);
      const Integer rhs = count_for(g, conv, k, l, jobs);
      if (lhs != rhs) {
        std::ostringstream msg;
        msg << "k=" << k << " l=" << l << ": polynomial " << lhs << " vs count " << rhs;
        return fail(name, msg.str());
      }
    }
  }
  return ok(name);
}

CheckResult check_derivative_identity(const SignedGraph& g, Convention conv, Memo* memo) {
  if (conv == Convention::Unsigned)
    throw std::invalid_argument("the mu-derivative identity applies to signed conventions");
  std::string name = with_conv("mu-derivative equals vertex-deletion sum", conv);
  const BivarPoly lhs = poly_for(g, conv, memo).poly.derivative_mu();
  BivarPoly rhs;
  for (int v = 0; v < g.vertex_count(); ++v)
    rhs += poly_for(delete_vertex(g, v), conv, memo).poly;
  if (lhs != rhs) return fail(name, to_string(lhs) + " vs " + to_string(rhs));
  return ok(name);
}

CheckResult check_antibalance_identity(const SignedGraph& g, Memo* memo) {
  std::string name = "lambda=2 zero-free slice counts antibalanced subgraphs";
  if (g.mode() != GraphMode::Signed)
    throw std::invalid_argument("the antibalance identity applies to signed graphs");
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("antibalance check needs at most 20 vertices");
  const BivarPoly lhs = poly_zero_free_dc(g, memo).poly.substitute_lambda(2);
  BivarPoly rhs;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) removed.push_back(v);
    const SignedGraph rest = induced_delete(g, removed);
    const SignedGraph bare = strip_halfedges(rest);
    if (!is_antibalanced(bare)) continue;
    rhs.add_term(0, static_cast<int>(removed.size()), pow(Integer(2), component_count(bare)));
  }
  if (lhs != rhs) return fail(name, to_string(lhs) + " vs " + to_string(rhs));
  return ok(name);
}

CheckResult check_independence_identity(const SignedGraph& g, Memo* memo) {
  std::string name = "lambda=1 slice matches independence polynomial";
  if (g.mode() != GraphMode::Signed || !g.links_only())
    throw std::invalid_argument("the independence identity applies to link-only signed graphs");
  const BivarPoly lhs = poly_signed_dc(g, memo).poly.substitute_lambda(1);
  const BivarPoly rhs = independence_poly(g).swap_variables();
  if (lhs != rhs) return fail(name, to_string(lhs) + " vs " + to_string(rhs));
  return ok(name);
}

CheckResult check_switching_invariance(const SignedGraph& g, const Switching& s, int kmax,
                                       int lmax, Memo* memo) {
  std::string name = "switching invariance";
  if (g.mode() != GraphMode::Signed)
    throw std::invalid_argument("switching applies to signed graphs");
  const SignedGraph h = switch_signs(g, s);
  if (std::pow(2.0 * (kmax + lmax) + 1.0, g.vertex_count()) <= 5e7) {
    const Integer cg = count_signed(g, kmax, lmax);
    const Integer ch = count_signed(h, kmax, lmax);
    if (cg != ch) {
      std::ostringstream msg;
      msg << "count at k=" << kmax << " l=" << lmax << ": " << cg << " vs " << ch
          << " after switching";
      return fail(name, msg.str());
    }
  }
  const BivarPoly pg = poly_signed_dc(g, memo).poly;
  const BivarPoly ph = poly_signed_dc(h, memo).poly;
  if (pg != ph) return fail(name, to_string(pg) + " vs " + to_string(ph) + " after switching");
  const BivarPoly zg = poly_zero_free_dc(g, memo).poly;
  const BivarPoly zh = poly_zero_free_dc(h, memo).poly;
  if (zg != zh)
    return fail(name, "zero-free " + to_string(zg) + " vs " + to_string(zh) + " after switching");
  return ok(name);
}

CheckResult check_reciprocity_suite(const SignedGraph& g, int kmax, int lmax, Memo* memo) {
  std::string name = g.mode() == GraphMode::Signed ? "reciprocity (signed)" : "reciprocity (unsigned)";
  if (!g.links_only()) throw std::invalid_argument("reciprocity checks need link-only graphs");
  for (int k = 1; k <= kmax; ++k) {
    for (int l = 0; l <= lmax; ++l) {
      const ReciprocityVerdict v = check_reciprocity(g, k, l, memo);
      if (!v.pass) {
        std::ostringstream msg;
        msg << "k=" << k << " l=" << l << ": signed evaluation " << v.lhs
            << " vs orientation-weighted count " << v.rhs;
        return fail(name, msg.str());
      }
    }
  }
  const SpecialVerdict sv =
      g.mode() == GraphMode::Signed ? zaslavsky_special(g, memo) : unsigned_acyclic_special(g, memo);
  if (!sv.pass) {
    std::ostringstream msg;
    msg << "(-1,0) evaluation " << sv.lhs << " vs acyclic orientation count " << sv.acyclic;
    return fail(name, msg.str());
  }
  return ok(name);
}

CheckResult check_l0_slice(const SignedGraph& g, Convention conv, int kmax, Memo* memo) {
  std::string name = with_conv("mu=0 slice matches one-variable recursion", conv);
  const BivarPoly slice = poly_for(g, conv, memo).poly.substitute_mu(0);
  const BivarPoly uni = chromatic_l0(g, conv, memo);
  if (slice != uni) return fail(name, to_string(slice) + " vs " + to_string(uni));
  for (int k = 0; k <= kmax; ++k) {
    const Integer lhs = eval_at_kl(PolyResult{uni, conv, Provenance::DeletionContraction}, k, 0);
    const Integer rhs = count_for(g, conv, k, 0, 1);
    if (lhs != rhs) {
      std::ostringstream msg;
      msg << "k=" << k << ": one-variable polynomial " << lhs << " vs count " << rhs;
      return fail(name, msg.str());
    }
  }
  return ok(name);
}

std::vector<CheckResult> run_identity_suite(const SignedGraph& g, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const int n = g.vertex_count();
  const auto grid_feasible = [&](Convention conv) {
    return std::pow(palette_size(conv, opt.kmax + opt.lmax), n) * (opt.kmax + 1.0) *
               (opt.lmax + 1.0) <=
           5e7;
  };
  Memo memo;
  const std::vector<Convention> convs =
      g.mode() == GraphMode::Signed
          ? std::vector<Convention>{Convention::Signed, Convention::ZeroFree}
          : std::vector<Convention>{Convention::Unsigned};
  for (Convention conv : convs) {
    if (grid_feasible(conv))
      out.push_back(check_oracle_grid(g, conv, opt.kmax, opt.lmax, &memo, opt.jobs));
    else
      out.push_back(ok(with_conv("brute-force agreement", conv), "skipped at this size"));
    if (n <= 20)
      out.push_back(check_three_way(g, conv, &memo, opt.jobs));
    else
      out.push_back(ok(with_conv("method agreement", conv), "skipped at this size"));
    out.push_back(check_l0_slice(g, conv, opt.kmax, &memo));
    if (conv != Convention::Unsigned) out.push_back(check_derivative_identity(g, conv, &memo));
  }
  if (g.mode() == GraphMode::Signed) {
    if (n <= 20)
      out.push_back(check_antibalance_identity(g, &memo));
    else
      out.push_back(ok("lambda=2 zero-free slice counts antibalanced subgraphs",
                       "skipped at this size"));
    std::mt19937 rng(opt.seed);
    for (int i = 0; i < opt.switchings; ++i) {
      Switching s(n);
      for (int v = 0; v < n; ++v) s[v] = rng() % 2 ? -1 : +1;
      out.push_back(check_switching_invariance(g, s, std::min(opt.kmax, 2), std::min(opt.lmax, 2),
                                               &memo));
      if (!out.back().pass) break;
    }
    if (g.links_only()) out.push_back(check_independence_identity(g, &memo));
  }
  if (g.links_only()) {
    const double cube = std::pow(2.0 * opt.kmax + 1.0, n) * std::pow(2.0, g.edge_count());
    if (cube <= 5e7 && g.edge_count() <= 16)
      out.push_back(check_reciprocity_suite(g, std::min(opt.kmax, 2), std::min(opt.lmax, 2),
                                            &memo));
    else
      out.push_back(ok(g.mode() == GraphMode::Signed ? "reciprocity (signed)"
                                                     : "reciprocity (unsigned)",
                       "skipped at this size"));
  }
  return out;
}

}  // namespace sgchrom
