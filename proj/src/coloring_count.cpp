#include "sgchrom/coloring_count.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace sgchrom {

namespace {

std::vector<int> palette_for(ColorRange range, int span) {
  std::vector<int> colors;
  switch (range) {
    case ColorRange::SignedRange:
      for (int c = -span; c <= span; ++c) colors.push_back(c);
      break;
    case ColorRange::ZeroFree:
      for (int c = -span; c <= span; ++c)
        if (c != 0) colors.push_back(c);
      break;
    case ColorRange::Unsigned:
      for (int c = 1; c <= span; ++c) colors.push_back(c);
      break;
  }
  return colors;
}

bool edge_ok_signed(const Edge& e, const std::vector<int>& x, int k) {
  switch (e.kind) {
    case EdgeKind::Link: {
      int xv = x[static_cast<std::size_t>(e.v)];
      int xw = x[static_cast<std::size_t>(e.w)];
      return xv != e.sign * xw || std::abs(xv) > k;
    }
    case EdgeKind::Loop: {
      int xv = x[static_cast<std::size_t>(e.v)];
      return e.sign > 0 ? std::abs(xv) > k : xv != 0;
    }
    case EdgeKind::Halfedge:
      return x[static_cast<std::size_t>(e.v)] != 0;
    case EdgeKind::Loose:
      return false;
  }
  return false;
}

bool edge_ok_unsigned(const Edge& e, const std::vector<int>& x, int k) {
  switch (e.kind) {
    case EdgeKind::Link: {
      int xv = x[static_cast<std::size_t>(e.v)];
      int xw = x[static_cast<std::size_t>(e.w)];
      return xv != xw || xv > k;
    }
    case EdgeKind::Loop:
      return x[static_cast<std::size_t>(e.v)] > k;
    case EdgeKind::Halfedge:
      throw std::invalid_argument("halfedges are not allowed in unsigned graphs");
    case EdgeKind::Loose:
      return false;
  }
  return false;
}

// Backtracking enumeration: vertex i is colored after 0..i-1, and each edge is
// checked once, at its highest endpoint.
struct Enumerator {
  const SignedGraph& g;
  bool unsigned_mode;
  int k;
  std::vector<int> palette;
  std::vector<std::vector<int>> ready;  // edge ids checked when vertex i gets its color

  Enumerator(const SignedGraph& graph, bool unsigned_mode_, int k_, std::vector<int> colors)
      : g(graph), unsigned_mode(unsigned_mode_), k(k_), palette(std::move(colors)) {
    ready.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      int last = e.kind == EdgeKind::Link ? e.w : e.v;  // links keep v < w
      ready[static_cast<std::size_t>(last)].push_back(i);
    }
  }

  bool vertex_ok(int v, std::vector<int>& x) const {
    for (int id : ready[static_cast<std::size_t>(v)]) {
      const Edge& e = g.edge(id);
      bool ok = unsigned_mode ? edge_ok_unsigned(e, x, k) : edge_ok_signed(e, x, k);
      if (!ok) return false;
    }
    return true;
  }

  Integer count_from(int v, std::vector<int>& x) const {
    if (v == g.vertex_count()) return 1;
    Integer total = 0;
    for (int c : palette) {
      x[static_cast<std::size_t>(v)] = c;
      if (vertex_ok(v, x)) total += count_from(v + 1, x);
    }
    return total;
  }

  // Restricts the first vertex to palette[first..last).
  Integer count_slice(std::size_t first, std::size_t last) const {
    std::vector<int> x(static_cast<std::size_t>(g.vertex_count()), 0);
    Integer total = 0;
    for (std::size_t ci = first; ci < last; ++ci) {
      x[0] = palette[ci];
      if (vertex_ok(0, x)) total += count_from(1, x);
    }
    return total;
  }
};

Integer count_colorings(const SignedGraph& g, ColorRange range, int k, int l, int jobs) {
  if (k < 0 || l < 0) throw std::invalid_argument("k and l must be nonnegative");
  const bool unsigned_mode = range == ColorRange::Unsigned;
  if (unsigned_mode) {
    if (g.mode() != GraphMode::Unsigned)
      throw std::invalid_argument("unsigned counting needs an unsigned graph");
    if (g.has_halfedge())
      throw std::invalid_argument("halfedges are not allowed in unsigned graphs");
  } else if (g.mode() != GraphMode::Signed) {
    throw std::invalid_argument("signed counting needs a signed graph");
  }
  if (g.has_loose_edge()) return 0;
  const int n = g.vertex_count();
  if (n == 0) return 1;

  Enumerator en(g, unsigned_mode, k, palette_for(range, k + l));
  const std::size_t colors = en.palette.size();
  if (colors == 0) return 0;

  std::size_t workers = jobs <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(jobs), colors);
  if (workers == 1) return en.count_slice(0, colors);

  std::vector<Integer> partial(workers, Integer(0));
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    std::size_t first = colors * t / workers;
    std::size_t last = colors * (t + 1) / workers;
    threads.emplace_back([&en, &partial, t, first, last] { partial[t] = en.count_slice(first, last); });
  }
  for (std::thread& th : threads) th.join();
  Integer total = 0;
  for (const Integer& p : partial) total += p;  // fixed order keeps the sum deterministic
  return total;
}

}  // namespace

bool is_proper(const SignedGraph& g, const Coloring& x, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (static_cast<int>(x.values.size()) != g.vertex_count())
    throw std::invalid_argument("coloring size does not match vertex count");
  const bool unsigned_mode = x.range == ColorRange::Unsigned;
  if (unsigned_mode != (g.mode() == GraphMode::Unsigned))
    throw std::invalid_argument("coloring range does not fit the graph mode");
  for (int c : x.values) {
    bool in_range = unsigned_mode ? (c >= 1 && c <= x.span)
                                  : (std::abs(c) <= x.span &&
                                     (x.range != ColorRange::ZeroFree || c != 0));
    if (!in_range) throw std::invalid_argument("color outside the declared range");
  }
  for (const Edge& e : g.edges()) {
    bool ok = unsigned_mode ? edge_ok_unsigned(e, x.values, k) : edge_ok_signed(e, x.values, k);
    if (!ok) return false;
  }
  return true;
}

Integer count_signed(const SignedGraph& g, int k, int l, int jobs) {
  return count_colorings(g, ColorRange::SignedRange, k, l, jobs);
}

Integer count_zero_free(const SignedGraph& g, int k, int l, int jobs) {
  return count_colorings(g, ColorRange::ZeroFree, k, l, jobs);
}

Integer count_unsigned(const SignedGraph& g, int k, int l, int jobs) {
  return count_colorings(g, ColorRange::Unsigned, k, l, jobs);
}

BivarPoly independence_poly(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("independence_poly: too many vertices");
  BivarPoly out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool independent = true;
    for (const Edge& e : g.edges()) {
      if (e.kind != EdgeKind::Link) continue;
      if ((mask >> e.v & 1) && (mask >> e.w & 1)) {
        independent = false;
        break;
      }
    }
    if (independent)
      out.add_term(n - __builtin_popcountl(mask), 0, 1);
  }
  return out;
}

BivarPoly antibalance_poly(const SignedGraph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("antibalance_poly: too many vertices");
  BivarPoly out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) removed.push_back(v);
    SignedGraph rest = induced_delete(g, removed);
    if (!is_antibalanced(rest)) continue;
    out.add_term(n - static_cast<int>(removed.size()), component_count(rest), 1);
  }
  return out;
}

}  // namespace sgchrom
