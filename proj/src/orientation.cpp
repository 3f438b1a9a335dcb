#include "sgchrom/orientation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sgchrom {

namespace {

void require_links_only(const SignedGraph& g, const char* what) {
  if (!g.links_only())
    throw std::invalid_argument(std::string(what) + " is defined for link-only graphs");
}

constexpr int kMaxCycleEdges = 20;

}  // namespace

std::vector<Orientation> enumerate_orientations(const SignedGraph& g) {
  const int m = g.edge_count();
  if (m > kMaxCycleEdges)
    throw std::invalid_argument("orientation enumeration: too many edges");
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Loose)
      throw std::invalid_argument("loose edges cannot be oriented");

  std::vector<Orientation> out;
  out.reserve(1ul << m);
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    Orientation o;
    o.eta.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edge(i);
      std::int8_t first = (mask >> i & 1) ? -1 : +1;
      o.eta[static_cast<std::size_t>(i)][0] = first;
      // sigma = -eta0 * eta1, hence eta1 = -sigma * eta0.
      o.eta[static_cast<std::size_t>(i)][1] =
          e.kind == EdgeKind::Halfedge ? std::int8_t{0}
                                       : static_cast<std::int8_t>(-e.sign * first);
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Cycle> simple_cycles(const SignedGraph& g) {
  require_links_only(g, "cycle enumeration");
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > kMaxCycleEdges) throw std::invalid_argument("cycle enumeration: too many edges");

  std::vector<Cycle> cycles;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<std::pair<int, int>>> ends(static_cast<std::size_t>(n));  // (edge, end)
    int used_edges = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = g.edge(i);
      ++used_edges;
      ++degree[static_cast<std::size_t>(e.v)];
      ++degree[static_cast<std::size_t>(e.w)];
      ends[static_cast<std::size_t>(e.v)].push_back({i, 0});
      ends[static_cast<std::size_t>(e.w)].push_back({i, 1});
    }
    bool regular = true;
    int touched = 0;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 0) continue;
      if (degree[static_cast<std::size_t>(v)] != 2) {
        regular = false;
        break;
      }
      ++touched;
    }
    // A cycle has as many edges as vertices; connectivity then follows from
    // a single walk covering all edges.
    if (!regular || touched != used_edges) continue;

    // Walk the subset from its lowest vertex to confirm it is one cycle.
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 2) {
        start = v;
        break;
      }
    int seen = 0;
    int at = start;
    int via_edge = -1;
    do {
      ++seen;
      const auto& pair = ends[static_cast<std::size_t>(at)];
      int e_next = pair[0].first == via_edge ? pair[1].first : pair[0].first;
      const Edge& e = g.edge(e_next);
      at = e.v == at ? e.w : e.v;
      via_edge = e_next;
    } while (at != start && seen <= used_edges);
    if (seen != used_edges || at != start) continue;

    Cycle cycle;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<std::size_t>(v)] != 2) continue;
      const auto& pair = ends[static_cast<std::size_t>(v)];
      cycle.push_back({pair[0].first, pair[0].second, pair[1].first, pair[1].second});
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

namespace {

// Edge ends grouped by vertex, built once per graph.
struct EndIndex {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> at;  // vertex -> (edge, end)

  explicit EndIndex(const SignedGraph& g) : n(g.vertex_count()), at(static_cast<std::size_t>(n)) {
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      at[static_cast<std::size_t>(e.v)].push_back({i, 0});
      at[static_cast<std::size_t>(e.w)].push_back({i, 1});
    }
  }
};

// Realizability test: an orientation admits a strictly compatible coloring
// exactly when peeling vertices whose live ends all agree consumes every
// edge. Such a vertex takes a larger magnitude than everything left, signed
// to match its arrows, which settles all its edges at once. A kernel with no
// such vertex pins every coloring to a closed condition, so nothing strict
// survives. Checking single cycles for sources and sinks is weaker: a corner
// where two unbalanced cycles meet can be traversed coherently even though
// neither cycle alone can.
bool acyclic_with(const EndIndex& index, const Orientation& o) {
  std::vector<char> dead(o.eta.size(), 0);
  std::size_t live = o.eta.size();
  bool progress = true;
  while (live > 0 && progress) {
    progress = false;
    for (int v = 0; v < index.n; ++v) {
      std::int8_t want = 0;
      bool consistent = true;
      for (const auto& [e, end] : index.at[static_cast<std::size_t>(v)]) {
        if (dead[static_cast<std::size_t>(e)]) continue;
        const std::int8_t eta = o.eta[static_cast<std::size_t>(e)][static_cast<std::size_t>(end)];
        if (want == 0) {
          want = eta;
        } else if (eta != want) {
          consistent = false;
          break;
        }
      }
      if (!consistent || want == 0) continue;
      for (const auto& [e, end] : index.at[static_cast<std::size_t>(v)]) {
        (void)end;
        if (!dead[static_cast<std::size_t>(e)]) {
          dead[static_cast<std::size_t>(e)] = 1;
          --live;
        }
      }
      progress = true;
    }
  }
  return live == 0;
}

}  // namespace

bool is_acyclic(const SignedGraph& g, const Orientation& o) {
  require_links_only(g, "acyclicity");
  if (o.eta.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("orientation does not match the edge count");
  return acyclic_with(EndIndex(g), o);
}

Integer count_acyclic(const SignedGraph& g) {
  require_links_only(g, "acyclicity");
  const EndIndex index(g);
  Integer total = 0;
  for (const Orientation& o : enumerate_orientations(g))
    if (acyclic_with(index, o)) ++total;
  return total;
}

bool is_compatible(const SignedGraph& g, const Orientation& o, const std::vector<int>& x) {
  if (o.eta.size() != static_cast<std::size_t>(g.edge_count()))
    throw std::invalid_argument("orientation does not match the edge count");
  if (x.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("coloring does not match the vertex count");
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    const auto& eta = o.eta[static_cast<std::size_t>(i)];
    switch (e.kind) {
      case EdgeKind::Link:
        if (eta[0] * x[static_cast<std::size_t>(e.v)] +
                eta[1] * x[static_cast<std::size_t>(e.w)] < 0)
          return false;
        break;
      case EdgeKind::Halfedge:
        if (eta[0] * x[static_cast<std::size_t>(e.v)] < 0) return false;
        break;
      case EdgeKind::Loop:
        // Negative loops have both ends equal; positive loops impose nothing.
        if (e.sign < 0 && eta[0] * x[static_cast<std::size_t>(e.v)] < 0) return false;
        break;
      case EdgeKind::Loose:
        throw std::invalid_argument("loose edges cannot be oriented");
    }
  }
  return true;
}

namespace {

Integer int_pow(Integer base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Sum over the inner-cube colorings of h of the number of compatible acyclic
// orientations; optionally records each coloring with its multiplicity.
Integer inner_weight_sum(const SignedGraph& h, int k, bool unsigned_mode,
                         std::vector<std::pair<std::vector<int>, Integer>>* rows) {
  const int n = h.vertex_count();
  const EndIndex index(h);
  std::vector<Orientation> acyclic;
  for (const Orientation& o : enumerate_orientations(h))
    if (acyclic_with(index, o)) acyclic.push_back(o);

  std::vector<int> x(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    // One empty coloring; the empty orientation is compatible and acyclic.
    if (rows) rows->push_back({x, Integer(1)});
    return 1;
  }
  std::vector<int> palette;
  if (unsigned_mode) {
    for (int c = 1; c <= k; ++c) palette.push_back(c);
  } else {
    for (int c = -k; c <= k; ++c) palette.push_back(c);
  }
  if (palette.empty()) return 0;
  Integer sum = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  bool done = false;
  while (!done) {
    for (int v = 0; v < n; ++v)
      x[static_cast<std::size_t>(v)] = palette[idx[static_cast<std::size_t>(v)]];
    Integer mult = 0;
    for (const Orientation& o : acyclic)
      if (is_compatible(h, o, x)) ++mult;
    if (rows) rows->push_back({x, mult});
    sum += mult;
    // Odometer, last vertex fastest.
    int v = n - 1;
    while (v >= 0) {
      if (++idx[static_cast<std::size_t>(v)] < palette.size()) break;
      idx[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0) done = true;
  }
  return sum;
}

MultiplicityReport reciprocity_rhs(const SignedGraph& g, int k, int l, bool unsigned_mode) {
  if (k < 1) throw std::invalid_argument("reciprocity needs k >= 1");
  if (l < 0) throw std::invalid_argument("reciprocity needs l >= 0");
  require_links_only(g, "reciprocity");
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("reciprocity needs at most 20 vertices");

  // Group colorings by the set U of vertices colored outside the cube. The
  // out-of-cube values are free, so U contributes (out choices)^|U| times the
  // summed multiplicities over the inner cube of the graph minus U.
  MultiplicityReport report;
  const Integer out_choices = unsigned_mode ? Integer(l) : Integer(2 * l);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) removed.push_back(v);
    if (!removed.empty() && out_choices == 0) continue;
    const SignedGraph h = induced_delete(g, removed);
    if (mask == 0) {
      report.inside_cube_weight = inner_weight_sum(h, k, unsigned_mode, &report.inner);
      report.total += report.inside_cube_weight;
    } else {
      report.total += int_pow(out_choices, static_cast<int>(removed.size())) *
                      inner_weight_sum(h, k, unsigned_mode, nullptr);
    }
  }
  report.outside_cube = report.total - report.inside_cube_weight;
  return report;
}

}  // namespace

MultiplicityReport reciprocity_rhs_signed(const SignedGraph& g, int k, int l) {
  if (g.mode() != GraphMode::Signed)
    throw std::invalid_argument("signed reciprocity needs a signed graph");
  return reciprocity_rhs(g, k, l, false);
}

MultiplicityReport reciprocity_rhs_unsigned(const SignedGraph& g, int k, int l) {
  if (g.mode() != GraphMode::Unsigned)
    throw std::invalid_argument("unsigned reciprocity needs an unsigned graph");
  return reciprocity_rhs(g, k, l, true);
}

ReciprocityVerdict check_reciprocity(const SignedGraph& g, int k, int l, Memo* memo) {
  const bool unsigned_mode = g.mode() == GraphMode::Unsigned;
  ReciprocityVerdict v;
  v.report = unsigned_mode ? reciprocity_rhs_unsigned(g, k, l) : reciprocity_rhs_signed(g, k, l);
  v.rhs = v.report.total;
  PolyResult p = unsigned_mode ? poly_unsigned_dc(g, memo) : poly_signed_dc(g, memo);
  Integer value = unsigned_mode ? p.poly.eval_int(Integer(-k), Integer(-l))
                                : p.poly.eval_int(Integer(-(2 * k + 1)), Integer(-2 * l));
  v.lhs = (g.vertex_count() % 2 == 0) ? value : -value;
  v.pass = v.lhs == v.rhs;
  return v;
}

SpecialVerdict zaslavsky_special(const SignedGraph& g, Memo* memo) {
  if (g.mode() != GraphMode::Signed)
    throw std::invalid_argument("this specialization needs a signed graph");
  require_links_only(g, "acyclicity");
  SpecialVerdict v;
  PolyResult p = poly_signed_dc(g, memo);
  Integer value = p.poly.eval_int(Integer(-1), Integer(0));
  v.lhs = (g.vertex_count() % 2 == 0) ? value : -value;
  v.acyclic = count_acyclic(g);
  v.pass = v.lhs == v.acyclic;
  return v;
}

SpecialVerdict unsigned_acyclic_special(const SignedGraph& g, Memo* memo) {
  if (g.mode() != GraphMode::Unsigned)
    throw std::invalid_argument("this specialization needs an unsigned graph");
  require_links_only(g, "acyclicity");
  SpecialVerdict v;
  PolyResult p = poly_unsigned_dc(g, memo);
  Integer value = p.poly.eval_int(Integer(-1), Integer(0));
  v.lhs = (g.vertex_count() % 2 == 0) ? value : -value;
  v.acyclic = count_acyclic(g);
  v.pass = v.lhs == v.acyclic;
  return v;
}

}  // namespace sgchrom
