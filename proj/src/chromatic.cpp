#include "sgchrom/chromatic.hpp"

#include <stdexcept>

#include "sgchrom/coloring_count.hpp"

namespace sgchrom {

const char* convention_name(Convention c) {
  switch (c) {
    case Convention::Signed: return "signed";
    case Convention::ZeroFree: return "zero-free";
    case Convention::Unsigned: return "unsigned";
  }
  return "?";
}

std::optional<BivarPoly> Memo::get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void Memo::put(const std::string& key, const BivarPoly& value) {
  std::lock_guard<std::mutex> lock(mu_);
  if (cap_ && map_.size() >= *cap_) return;  // full: fall back to recomputation
  map_.emplace(key, value);
}

std::size_t Memo::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

namespace {

void require_mode(const SignedGraph& g, Convention conv) {
  const bool want_unsigned = conv == Convention::Unsigned;
  if (want_unsigned != (g.mode() == GraphMode::Unsigned))
    throw std::invalid_argument(std::string("the ") + convention_name(conv) +
                                " polynomial needs a graph in the matching mode");
  if (want_unsigned && g.has_halfedge())
    throw std::invalid_argument("halfedges are not allowed in unsigned graphs");
}

bool vacuous_without_zero(const Edge& e) {
  return e.kind == EdgeKind::Halfedge || (e.kind == EdgeKind::Loop && e.sign < 0);
}

// Links first, then positive loops, then halfedges and negative loops;
// lowest id breaks ties. Loose edges are handled before selection.
int select_edge(const SignedGraph& g) {
  int best = -1, best_rank = 3;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    int rank;
    switch (e.kind) {
      case EdgeKind::Link: rank = 0; break;
      case EdgeKind::Loop: rank = e.sign > 0 ? 1 : 2; break;
      case EdgeKind::Halfedge: rank = 2; break;
      default: continue;
    }
    if (rank < best_rank) {
      best_rank = rank;
      best = i;
      if (rank == 0) break;  // ids ascend, so the first link wins outright
    }
  }
  return best;
}

const char* dc_prefix(Convention conv) {
  switch (conv) {
    case Convention::Signed: return "dc:S:";
    case Convention::ZeroFree: return "dc:Z:";
    case Convention::Unsigned: return "dc:U:";
  }
  return "dc:?:";
}

const char* l0_prefix(Convention conv) {
  switch (conv) {
    case Convention::Signed: return "l0:S:";
    case Convention::ZeroFree: return "l0:Z:";
    case Convention::Unsigned: return "l0:U:";
  }
  return "l0:?:";
}

BivarPoly dc_rec(const SignedGraph& g, Convention conv, Memo& memo, const EdgeSelector* pick) {
  if (g.has_loose_edge()) return BivarPoly();
  if (g.edge_count() == 0)
    return pow(BivarPoly::lambda() + BivarPoly::mu(), g.vertex_count());

  std::string key;
  if (!pick) {
    key = dc_prefix(conv) + canonical_key(g);
    if (auto hit = memo.get(key)) return *hit;
  }

  const int e = pick ? (*pick)(g) : select_edge(g);
  const Edge& edge = g.edge(e);
  BivarPoly result;
  if (vacuous_without_zero(edge)) {
    if (conv == Convention::ZeroFree) {
      result = dc_rec(delete_edge(g, e), conv, memo, pick);
    } else {
      result = dc_rec(delete_edge(g, e), conv, memo, pick) -
               dc_rec(contract_edge(g, e), conv, memo, pick);
    }
  } else {
    Contraction con = contract_edge_tracked(g, e);
    result = dc_rec(delete_edge(g, e), conv, memo, pick) - dc_rec(con.graph, conv, memo, pick) +
             BivarPoly::mu() * dc_rec(delete_vertex(con.graph, *con.merged_vertex), conv, memo, pick);
  }
  if (!pick) memo.put(key, result);
  return result;
}

BivarPoly l0_rec(const SignedGraph& g, Convention conv, Memo& memo) {
  if (g.has_loose_edge()) return BivarPoly();
  if (g.edge_count() == 0) return pow(BivarPoly::lambda(), g.vertex_count());

  std::string key = l0_prefix(conv) + canonical_key(g);
  if (auto hit = memo.get(key)) return *hit;

  const int e = select_edge(g);
  const Edge& edge = g.edge(e);
  BivarPoly result;
  if (vacuous_without_zero(edge) && conv == Convention::ZeroFree) {
    result = l0_rec(delete_edge(g, e), conv, memo);
  } else {
    // At mu = 0 the add-back term vanishes, so every remaining case is
    // deletion minus contraction.
    result = l0_rec(delete_edge(g, e), conv, memo) - l0_rec(contract_edge(g, e), conv, memo);
  }
  memo.put(key, result);
  return result;
}

BivarPoly subset_sum(const SignedGraph& g, Convention conv, Memo& memo) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("subset expansion: too many vertices");
  BivarPoly acc;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) removed.push_back(v);
    BivarPoly z = l0_rec(induced_delete(g, removed), conv, memo);
    acc += BivarPoly::monomial(0, static_cast<int>(removed.size())) * z;
  }
  return acc;
}

PolyResult dc_result(const SignedGraph& g, Convention conv, Memo* memo) {
  require_mode(g, conv);
  Memo local;
  BivarPoly p = dc_rec(g, conv, memo ? *memo : local, nullptr);
  return PolyResult{std::move(p), conv, Provenance::DeletionContraction};
}

PolyResult subset_result(const SignedGraph& g, Convention conv, Memo* memo) {
  require_mode(g, conv);
  Memo local;
  BivarPoly p = subset_sum(g, conv, memo ? *memo : local);
  return PolyResult{std::move(p), conv, Provenance::SubsetExpansion};
}

}  // namespace

PolyResult poly_signed_dc(const SignedGraph& g, Memo* memo) {
  return dc_result(g, Convention::Signed, memo);
}

PolyResult poly_zero_free_dc(const SignedGraph& g, Memo* memo) {
  return dc_result(g, Convention::ZeroFree, memo);
}

PolyResult poly_unsigned_dc(const SignedGraph& g, Memo* memo) {
  return dc_result(g, Convention::Unsigned, memo);
}

BivarPoly chromatic_l0(const SignedGraph& g, Convention conv, Memo* memo) {
  require_mode(g, conv);
  Memo local;
  return l0_rec(g, conv, memo ? *memo : local);
}

PolyResult poly_signed_subset(const SignedGraph& g, Memo* memo) {
  return subset_result(g, Convention::Signed, memo);
}

PolyResult poly_zero_free_subset(const SignedGraph& g, Memo* memo) {
  return subset_result(g, Convention::ZeroFree, memo);
}

PolyResult poly_unsigned_subset(const SignedGraph& g, Memo* memo) {
  return subset_result(g, Convention::Unsigned, memo);
}

PolyResult poly_interpolated(const SignedGraph& g, Convention conv, int jobs) {
  require_mode(g, conv);
  const int n = g.vertex_count();
  std::vector<Integer> lambdas, mus;
  std::vector<std::vector<Integer>> values;
  for (int k = 0; k <= n; ++k) {
    switch (conv) {
      case Convention::Signed: lambdas.push_back(2 * k + 1); break;
      case Convention::ZeroFree: lambdas.push_back(2 * k); break;
      case Convention::Unsigned: lambdas.push_back(k); break;
    }
  }
  for (int l = 0; l <= n; ++l)
    mus.push_back(conv == Convention::Unsigned ? l : 2 * l);
  for (int k = 0; k <= n; ++k) {
    std::vector<Integer> row;
    for (int l = 0; l <= n; ++l) {
      switch (conv) {
        case Convention::Signed: row.push_back(count_signed(g, k, l, jobs)); break;
        case Convention::ZeroFree: row.push_back(count_zero_free(g, k, l, jobs)); break;
        case Convention::Unsigned: row.push_back(count_unsigned(g, k, l, jobs)); break;
      }
    }
    values.push_back(std::move(row));
  }
  BivarPoly p = interpolate_grid(lambdas, mus, values, n);
  return PolyResult{std::move(p), conv, Provenance::Interpolation};
}

Integer eval_at_kl(const PolyResult& p, const Integer& k, const Integer& l) {
  switch (p.convention) {
    case Convention::Signed: return p.poly.eval_int(2 * k + 1, 2 * l);
    case Convention::ZeroFree: return p.poly.eval_int(2 * k, 2 * l);
    case Convention::Unsigned: return p.poly.eval_int(k, l);
  }
  throw std::logic_error("unknown convention");
}

BivarPoly dc_with_selector(const SignedGraph& g, Convention conv, const EdgeSelector& pick) {
  require_mode(g, conv);
  Memo unused;
  return dc_rec(g, conv, unused, &pick);
}

}  // namespace sgchrom
