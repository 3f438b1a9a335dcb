#include "sgchrom/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace sgchrom {

namespace {

void check_sign(int sign) {
  if (sign != +1 && sign != -1)
    throw std::invalid_argument("edge sign must be +1 or -1");
}

// Index map after removing vertex b: indices above b shift down by one.
int remap_past(int x, int b) { return x > b ? x - 1 : x; }

Edge make_link(int v, int w, int sign) {
  Edge e;
  e.kind = EdgeKind::Link;
  e.v = std::min(v, w);
  e.w = std::max(v, w);
  e.sign = sign;
  return e;
}

Edge make_loop(int v, int sign) {
  Edge e;
  e.kind = EdgeKind::Loop;
  e.v = v;
  e.w = -1;
  e.sign = sign;
  return e;
}

Edge make_halfedge(int v) {
  Edge e;
  e.kind = EdgeKind::Halfedge;
  e.v = v;
  e.w = -1;
  e.sign = +1;
  return e;
}

Edge make_loose() { return Edge{}; }

}  // namespace

SignedGraph::SignedGraph(GraphMode mode, int vertex_count)
    : mode_(mode), n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  labels_.resize(n_);
  std::iota(labels_.begin(), labels_.end(), 1);
}

SignedGraph::SignedGraph(GraphMode mode, int vertex_count, std::vector<int> labels)
    : mode_(mode), n_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label vector size does not match vertex count");
}

void SignedGraph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range(std::string(what) + ": vertex index out of range");
}

void SignedGraph::add_link(int v, int w, int sign) {
  check_vertex(v, "add_link");
  check_vertex(w, "add_link");
  if (v == w) throw std::invalid_argument("a link needs two distinct endpoints; use a loop");
  check_sign(sign);
  if (mode_ == GraphMode::Unsigned && sign != +1)
    throw std::invalid_argument("unsigned graphs admit only positive edges");
  edges_.push_back(make_link(v, w, sign));
}

void SignedGraph::add_loop(int v, int sign) {
  check_vertex(v, "add_loop");
  check_sign(sign);
  if (mode_ == GraphMode::Unsigned && sign != +1)
    throw std::invalid_argument("unsigned graphs admit only positive loops");
  edges_.push_back(make_loop(v, sign));
}

void SignedGraph::add_halfedge(int v) {
  check_vertex(v, "add_halfedge");
  if (mode_ == GraphMode::Unsigned)
    throw std::invalid_argument("halfedges are not allowed in unsigned graphs");
  edges_.push_back(make_halfedge(v));
}

void SignedGraph::add_loose() { edges_.push_back(make_loose()); }

void SignedGraph::add_edge(const Edge& e) {
  switch (e.kind) {
    case EdgeKind::Link: add_link(e.v, e.w, e.sign); break;
    case EdgeKind::Loop: add_loop(e.v, e.sign); break;
    case EdgeKind::Halfedge: add_halfedge(e.v); break;
    case EdgeKind::Loose: add_loose(); break;
  }
}

const Edge& SignedGraph::edge(int id) const {
  if (id < 0 || id >= edge_count())
    throw std::out_of_range("unknown edge id " + std::to_string(id));
  return edges_[static_cast<std::size_t>(id)];
}

int SignedGraph::label(int v) const {
  check_vertex(v, "label");
  return labels_[static_cast<std::size_t>(v)];
}

bool SignedGraph::has_loose_edge() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Loose; });
}

bool SignedGraph::has_halfedge() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Halfedge; });
}

bool SignedGraph::links_only() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Link; });
}

SignedGraph delete_edge(const SignedGraph& g, int edge_id) {
  g.edge(edge_id);  // range check
  SignedGraph out(g.mode(), g.vertex_count(), g.labels());
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != edge_id) out.add_edge(g.edge(i));
  return out;
}

SignedGraph delete_vertex(const SignedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::out_of_range("delete_vertex: vertex index out of range");
  std::vector<int> labels = g.labels();
  labels.erase(labels.begin() + v);
  SignedGraph out(g.mode(), g.vertex_count() - 1, std::move(labels));
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::Loose) {
      out.add_loose();
      continue;
    }
    if (e.incident_to(v)) continue;
    Edge moved = e;
    moved.v = remap_past(moved.v, v);
    if (moved.kind == EdgeKind::Link) moved.w = remap_past(moved.w, v);
    out.add_edge(moved);
  }
  return out;
}

SignedGraph induced_delete(const SignedGraph& g, const std::vector<int>& removed) {
  std::vector<int> ws = removed;
  std::sort(ws.begin(), ws.end(), std::greater<int>());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  for (int v : ws)
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("induced_delete: vertex index out of range");
  SignedGraph out = g;
  for (int v : ws) out = delete_vertex(out, v);  // descending order keeps indices valid
  return out;
}

SignedGraph switch_signs(const SignedGraph& g, const Switching& s) {
  if (g.mode() != GraphMode::Signed)
    throw std::invalid_argument("switching is defined for signed graphs");
  if (static_cast<int>(s.size()) != g.vertex_count())
    throw std::invalid_argument("switching must assign a sign to every vertex");
  for (int x : s)
    if (x != +1 && x != -1)
      throw std::invalid_argument("switching entries must be +1 or -1");
  SignedGraph out(g.mode(), g.vertex_count(), g.labels());
  for (const Edge& e : g.edges()) {
    Edge f = e;
    if (f.kind == EdgeKind::Link)
      f.sign = s[static_cast<std::size_t>(f.v)] * f.sign * s[static_cast<std::size_t>(f.w)];
    // loops keep their sign (s_v * sigma * s_v = sigma); halfedges carry none
    out.add_edge(f);
  }
  return out;
}

SignedGraph negate(const SignedGraph& g) {
  SignedGraph out(g.mode(), g.vertex_count(), g.labels());
  for (const Edge& e : g.edges()) {
    Edge f = e;
    if (f.kind == EdgeKind::Link || f.kind == EdgeKind::Loop) f.sign = -f.sign;
    out.add_edge(f);
  }
  return out;
}

Contraction contract_edge_tracked(const SignedGraph& g, int edge_id) {
  const Edge& e = g.edge(edge_id);
  switch (e.kind) {
    case EdgeKind::Loose:
      throw std::invalid_argument("a loose edge is not contractible");
    case EdgeKind::Loop:
      if (e.sign > 0) return Contraction{delete_edge(g, edge_id), e.v};
      [[fallthrough]];  // negative loop contracts like a halfedge
    case EdgeKind::Halfedge: {
      const int v = e.v;
      std::vector<int> labels = g.labels();
      labels.erase(labels.begin() + v);
      SignedGraph out(g.mode(), g.vertex_count() - 1, std::move(labels));
      for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_id) continue;
        const Edge& f = g.edge(i);
        if (f.kind == EdgeKind::Loose) {
          out.add_loose();
        } else if (!f.incident_to(v)) {
          Edge moved = f;
          moved.v = remap_past(moved.v, v);
          if (moved.kind == EdgeKind::Link) moved.w = remap_past(moved.w, v);
          out.add_edge(moved);
        } else if (f.kind == EdgeKind::Link) {
          out.add_halfedge(remap_past(f.v == v ? f.w : f.v, v));
        } else {
          out.add_loose();  // loop or halfedge sharing the deleted vertex
        }
      }
      return Contraction{std::move(out), std::nullopt};
    }
    case EdgeKind::Link: {
      const int a = e.v, b = e.w;  // a < b; b merges into a
      std::vector<int> labels = g.labels();
      labels.erase(labels.begin() + b);
      SignedGraph out(g.mode(), g.vertex_count() - 1, std::move(labels));
      for (int i = 0; i < g.edge_count(); ++i) {
        if (i == edge_id) continue;
        const Edge& f = g.edge(i);
        if (f.kind == EdgeKind::Loose) {
          out.add_loose();
          continue;
        }
        Edge moved = f;
        // Switch at b so the contracted edge is positive: links with exactly
        // one endpoint at b flip sign when the edge itself is negative.
        if (e.sign < 0 && f.kind == EdgeKind::Link && f.incident_to(b))
          moved.sign = -moved.sign;
        if (moved.kind == EdgeKind::Link) {
          int x = moved.v == b ? a : moved.v;
          int y = moved.w == b ? a : moved.w;
          if (x == y) {
            out.add_loop(remap_past(x, b), moved.sign);  // parallel link folds to a loop
          } else {
            out.add_link(remap_past(x, b), remap_past(y, b), moved.sign);
          }
        } else {  // Loop or Halfedge
          int x = moved.v == b ? a : moved.v;
          moved.v = remap_past(x, b);
          out.add_edge(moved);
        }
      }
      return Contraction{std::move(out), a};
    }
  }
  throw std::logic_error("unreachable edge kind");
}

SignedGraph contract_edge(const SignedGraph& g, int edge_id) {
  return contract_edge_tracked(g, edge_id).graph;
}

namespace {

// One pass over the graph: component ids in order of smallest vertex, plus a
// balance certificate attempt (sign propagation over links) per component.
struct ComponentScan {
  int vertex_comps = 0;
  std::vector<int> comp_of;       // per vertex
  std::vector<bool> balanced;     // per vertex component
  std::vector<int> loose_edges;   // edge ids
};

ComponentScan scan_components(const SignedGraph& g) {
  const int n = g.vertex_count();
  ComponentScan scan;
  scan.comp_of.assign(static_cast<std::size_t>(n), -1);

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::Link) {
      adj[static_cast<std::size_t>(e.v)].push_back({e.w, e.sign});
      adj[static_cast<std::size_t>(e.w)].push_back({e.v, e.sign});
    } else if (e.kind == EdgeKind::Loose) {
      scan.loose_edges.push_back(i);
    }
  }

  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (scan.comp_of[static_cast<std::size_t>(root)] != -1) continue;
    const int comp = scan.vertex_comps++;
    bool ok = true;
    sign[static_cast<std::size_t>(root)] = +1;
    scan.comp_of[static_cast<std::size_t>(root)] = comp;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [w, sg] : adj[static_cast<std::size_t>(u)]) {
        int expect = sign[static_cast<std::size_t>(u)] * sg;
        if (scan.comp_of[static_cast<std::size_t>(w)] == -1) {
          scan.comp_of[static_cast<std::size_t>(w)] = comp;
          sign[static_cast<std::size_t>(w)] = expect;
          stack.push_back(w);
        } else if (sign[static_cast<std::size_t>(w)] != expect) {
          ok = false;  // negative cycle
        }
      }
    }
    scan.balanced.push_back(ok);
  }

  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::Halfedge) {
      scan.balanced[static_cast<std::size_t>(scan.comp_of[static_cast<std::size_t>(e.v)])] = false;
    } else if (e.kind == EdgeKind::Loop && e.sign < 0) {
      scan.balanced[static_cast<std::size_t>(scan.comp_of[static_cast<std::size_t>(e.v)])] = false;
    }
  }
  return scan;
}

}  // namespace

std::vector<SignedGraph> components(const SignedGraph& g) {
  ComponentScan scan = scan_components(g);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(scan.vertex_comps));
  for (int v = 0; v < g.vertex_count(); ++v)
    members[static_cast<std::size_t>(scan.comp_of[static_cast<std::size_t>(v)])].push_back(v);

  std::vector<SignedGraph> out;
  out.reserve(members.size() + scan.loose_edges.size());
  std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
  for (const std::vector<int>& verts : members) {
    std::vector<int> labels;
    labels.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      new_index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
      labels.push_back(g.label(verts[i]));
    }
    SignedGraph comp(g.mode(), static_cast<int>(verts.size()), std::move(labels));
    for (const Edge& e : g.edges()) {
      if (e.kind == EdgeKind::Loose) continue;
      if (scan.comp_of[static_cast<std::size_t>(e.v)] !=
          scan.comp_of[static_cast<std::size_t>(verts[0])])
        continue;
      Edge moved = e;
      moved.v = new_index[static_cast<std::size_t>(moved.v)];
      if (moved.kind == EdgeKind::Link) moved.w = new_index[static_cast<std::size_t>(moved.w)];
      comp.add_edge(moved);
    }
    out.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < scan.loose_edges.size(); ++i) {
    SignedGraph loose(g.mode(), 0);
    loose.add_loose();
    out.push_back(std::move(loose));
  }
  return out;
}

int component_count(const SignedGraph& g) {
  ComponentScan scan = scan_components(g);
  return scan.vertex_comps + static_cast<int>(scan.loose_edges.size());
}

std::vector<bool> balanced_components(const SignedGraph& g) {
  ComponentScan scan = scan_components(g);
  std::vector<bool> out = scan.balanced;
  out.insert(out.end(), scan.loose_edges.size(), false);
  return out;
}

bool is_balanced(const SignedGraph& g) {
  std::vector<bool> b = balanced_components(g);
  return std::all_of(b.begin(), b.end(), [](bool x) { return x; });
}

bool is_antibalanced(const SignedGraph& g) { return is_balanced(negate(g)); }

std::string canonical_key(const SignedGraph& g) {
  std::vector<std::tuple<int, int, int, int>> descr;
  descr.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Link: descr.emplace_back(0, e.v, e.w, e.sign); break;
      case EdgeKind::Loop: descr.emplace_back(1, e.v, 0, e.sign); break;
      case EdgeKind::Halfedge: descr.emplace_back(2, e.v, 0, 0); break;
      case EdgeKind::Loose: descr.emplace_back(3, 0, 0, 0); break;
    }
  }
  std::sort(descr.begin(), descr.end());
  std::string key;
  key.reserve(8 + descr.size() * 8);
  key += g.mode() == GraphMode::Signed ? 'S' : 'U';
  key += std::to_string(g.vertex_count());
  for (auto [kind, v, w, sign] : descr) {
    key += '|';
    switch (kind) {
      case 0:
        key += 'L';
        key += std::to_string(v);
        key += ',';
        key += std::to_string(w);
        key += sign > 0 ? '+' : '-';
        break;
      case 1:
        key += 'O';
        key += std::to_string(v);
        key += sign > 0 ? '+' : '-';
        break;
      case 2:
        key += 'H';
        key += std::to_string(v);
        break;
      default:
        key += 'X';
        break;
    }
  }
  return key;
}

}  // namespace sgchrom
