#include "family.hpp"

#include <functional>
#include <random>
#include <set>
#include <string>

namespace family {

using sgchrom::Edge;
using sgchrom::EdgeKind;
using sgchrom::GraphMode;
using sgchrom::SignedGraph;

namespace {

// One addable edge symbol.
struct Symbol {
  EdgeKind kind;
  int v;
  int w;
  int sign;
};

void apply(SignedGraph& g, const Symbol& s) {
  switch (s.kind) {
    case EdgeKind::Link: g.add_link(s.v, s.w, s.sign); break;
    case EdgeKind::Loop: g.add_loop(s.v, s.sign); break;
    case EdgeKind::Halfedge: g.add_halfedge(s.v); break;
    case EdgeKind::Loose: break;
  }
}

std::vector<Symbol> signed_symbols(int n) {
  std::vector<Symbol> out;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      for (int sign : {+1, -1}) out.push_back({EdgeKind::Link, v, w, sign});
  for (int v = 0; v < n; ++v)
    for (int sign : {+1, -1}) out.push_back({EdgeKind::Loop, v, 0, sign});
  for (int v = 0; v < n; ++v) out.push_back({EdgeKind::Halfedge, v, 0, +1});
  return out;
}

std::vector<Symbol> unsigned_symbols(int n) {
  std::vector<Symbol> out;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) out.push_back({EdgeKind::Link, v, w, +1});
  for (int v = 0; v < n; ++v) out.push_back({EdgeKind::Loop, v, 0, +1});
  return out;
}

// Emits every multiset of up to mmax symbols, as nondecreasing index vectors.
void multisets(std::size_t nsym, int mmax, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    emit(cur);
    if (static_cast<int>(cur.size()) == mmax) return;
    for (std::size_t s = lo; s < nsym; ++s) {
      cur.push_back(static_cast<int>(s));
      rec(s);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<SignedGraph> mixed_family(GraphMode mode, unsigned seed, std::size_t cap) {
  std::vector<SignedGraph> out;
  std::set<std::string> seen;
  auto push = [&](const SignedGraph& g) {
    if (seen.insert(canonical_key(g)).second) out.push_back(g);
  };
  const auto symbols_for = [&](int n) {
    return mode == GraphMode::Signed ? signed_symbols(n) : unsigned_symbols(n);
  };
  for (int n = 0; n <= 2 && out.size() < cap; ++n) {
    const std::vector<Symbol> sym = symbols_for(n);
    multisets(sym.size(), 6, [&](const std::vector<int>& picks) {
      if (out.size() >= cap) return;
      SignedGraph g(mode, n);
      for (int s : picks) apply(g, sym[static_cast<std::size_t>(s)]);
      push(g);
    });
  }
  std::mt19937 rng(seed);
  std::size_t attempts = 0;
  while (out.size() < cap && attempts < cap * 40) {
    ++attempts;
    const int n = 3 + static_cast<int>(rng() % 2);
    const std::vector<Symbol> sym = symbols_for(n);
    const int m = static_cast<int>(rng() % 7);
    SignedGraph g(mode, n);
    for (int i = 0; i < m; ++i) apply(g, sym[rng() % sym.size()]);
    push(g);
  }
  return out;
}

}  // namespace

std::vector<SignedGraph> signed_family(unsigned seed, std::size_t cap) {
  return mixed_family(GraphMode::Signed, seed, cap);
}

std::vector<SignedGraph> unsigned_family(unsigned seed, std::size_t cap) {
  return mixed_family(GraphMode::Unsigned, seed, cap);
}

std::vector<SignedGraph> link_only_signed_family(int nmax, int mmax) {
  std::vector<SignedGraph> out;
  std::set<std::string> seen;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<Symbol> sym;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        for (int sign : {+1, -1}) sym.push_back({EdgeKind::Link, v, w, sign});
    multisets(sym.size(), mmax, [&](const std::vector<int>& picks) {
      SignedGraph g(GraphMode::Signed, n);
      for (int s : picks) apply(g, sym[static_cast<std::size_t>(s)]);
      if (seen.insert(canonical_key(g)).second) out.push_back(g);
    });
  }
  return out;
}

std::vector<SignedGraph> simple_unsigned_family(int nmax) {
  std::vector<SignedGraph> out;
  for (int n = 0; n <= nmax; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) pairs.push_back({v, w});
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      SignedGraph g(GraphMode::Unsigned, n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1u << i)) g.add_link(pairs[i].first, pairs[i].second, +1);
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace family
