#include "algstat/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>

#include "algstat/error.hpp"

namespace algstat {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.source) + ", " + std::to_string(e.target) + ")";
}

Graph::Graph(GraphKind kind, std::size_t n, std::vector<Edge> edges) : kind_(kind), n_(n) {
  for (auto e : edges) {
    if (e.source < 1 || e.target < 1 || static_cast<std::size_t>(e.source) > n ||
        static_cast<std::size_t>(e.target) > n)
      throw Error(ErrorCode::IndexOutOfRange, "edge " + to_string(e) + " has an endpoint outside 1.." + std::to_string(n));
    if (e.source == e.target) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.source));
    if (kind == GraphKind::Undirected && e.source > e.target) std::swap(e.source, e.target);
    if (!lookup_.emplace(e.source, e.target).second) throw Error(ErrorCode::DuplicateEdge, to_string(e));
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (kind_ == GraphKind::Undirected && a > b) std::swap(a, b);
  return lookup_.count({a, b}) != 0;
}

bool Graph::adjacent(Vertex a, Vertex b) const { return has_edge(a, b) || has_edge(b, a); }

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& e : edges_) {
    if (e.source == v) out.push_back(e.target);
    else if (e.target == v) out.push_back(e.source);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> Graph::parents(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& e : edges_)
    if (e.target == v) out.push_back(e.source);
  return out;
}

std::vector<Vertex> Graph::children(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& e : edges_)
    if (e.source == v) out.push_back(e.target);
  return out;
}

std::optional<std::vector<Vertex>> Graph::topological_order() const {
  std::vector<std::size_t> indeg(n_ + 1, 0);
  for (const auto& e : edges_) ++indeg[static_cast<std::size_t>(e.target)];
  std::vector<Vertex> order;
  std::vector<Vertex> ready;
  for (std::size_t v = 1; v <= n_; ++v)
    if (indeg[v] == 0) ready.push_back(static_cast<Vertex>(v));
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    Vertex v = *it;
    ready.erase(it);
    order.push_back(v);
    for (const auto& e : edges_)
      if (e.source == v && --indeg[static_cast<std::size_t>(e.target)] == 0) ready.push_back(e.target);
  }
  if (order.size() != n_) return std::nullopt;
  return order;
}

std::vector<Vertex> Graph::descendants(Vertex v) const {
  std::vector<bool> seen(n_ + 1, false);
  std::vector<Vertex> stack{v};
  seen[static_cast<std::size_t>(v)] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex c : children(u))
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        stack.push_back(c);
      }
  }
  std::vector<Vertex> out;
  for (std::size_t i = 1; i <= n_; ++i)
    if (seen[i]) out.push_back(static_cast<Vertex>(i));
  return out;
}

Graph graph_from_edges(GraphKind kind, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       std::optional<std::size_t> n) {
  std::size_t max_vertex = 0;
  std::vector<Edge> es;
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1) throw Error(ErrorCode::IndexOutOfRange, "vertices are numbered from 1");
    max_vertex = std::max({max_vertex, static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    es.push_back({a, b});
  }
  return Graph(kind, n.value_or(max_vertex), std::move(es));
}

bool Labeling::is_total(const Graph& g) const {
  for (std::size_t v = 1; v <= g.n_vertices(); ++v)
    if (!vertex_labels.count(static_cast<Vertex>(v))) return false;
  for (const auto& e : g.edges())
    if (!edge_labels.count(e)) return false;
  return true;
}

// ---- separation -------------------------------------------------------------

namespace {

void require_disjoint(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  std::vector<int> seen(g.n_vertices() + 1, 0);
  for (const VertexSet* s : {&a, &b, &c})
    for (Vertex v : *s) {
      if (v < 1 || static_cast<std::size_t>(v) > g.n_vertices())
        throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
      if (seen[static_cast<std::size_t>(v)]++)
        throw Error(ErrorCode::OverlappingSets, "vertex " + std::to_string(v) + " occurs in more than one set");
    }
}

}  // namespace

bool is_separated(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  require_disjoint(g, a, b, c);
  std::vector<bool> blocked(g.n_vertices() + 1, false);
  std::vector<bool> target(g.n_vertices() + 1, false);
  for (Vertex v : c) blocked[static_cast<std::size_t>(v)] = true;
  for (Vertex v : b) target[static_cast<std::size_t>(v)] = true;
  std::vector<bool> seen(g.n_vertices() + 1, false);
  std::deque<Vertex> queue(a.begin(), a.end());
  for (Vertex v : a) seen[static_cast<std::size_t>(v)] = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (seen[wi] || blocked[wi]) continue;
      if (target[wi]) return false;
      seen[wi] = true;
      queue.push_back(w);
    }
  }
  return true;
}

bool d_separated(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  if (!g.directed()) throw Error(ErrorCode::UnsupportedGraphKind, "d-separation needs a directed graph");
  if (!g.is_acyclic()) throw Error(ErrorCode::CyclicGraph, "d-separation needs an acyclic graph");
  require_disjoint(g, a, b, c);
  const std::size_t n = g.n_vertices();
  std::vector<bool> in_c(n + 1, false);
  for (Vertex v : c) in_c[static_cast<std::size_t>(v)] = true;
  // Vertices with a descendant in C (including C itself) open colliders.
  std::vector<bool> has_c_desc(n + 1, false);
  for (std::size_t v = 1; v <= n; ++v)
    for (Vertex d : g.descendants(static_cast<Vertex>(v)))
      if (in_c[static_cast<std::size_t>(d)]) has_c_desc[v] = true;
  std::vector<bool> in_b(n + 1, false);
  for (Vertex v : b) in_b[static_cast<std::size_t>(v)] = true;

  // Reachability over (vertex, arrived-from-child?) states.
  std::vector<std::array<bool, 2>> visited(n + 1, {false, false});
  std::deque<std::pair<Vertex, bool>> queue;
  for (Vertex v : a) queue.emplace_back(v, true);
  while (!queue.empty()) {
    auto [v, from_child] = queue.front();
    queue.pop_front();
    auto vi = static_cast<std::size_t>(v);
    if (visited[vi][from_child]) continue;
    visited[vi][from_child] = true;
    if (in_b[vi]) return false;
    if (from_child) {
      if (in_c[vi]) continue;
      for (Vertex p : g.parents(v)) queue.emplace_back(p, true);
      for (Vertex ch : g.children(v)) queue.emplace_back(ch, false);
    } else {
      if (!in_c[vi])
        for (Vertex ch : g.children(v)) queue.emplace_back(ch, false);
      if (has_c_desc[vi])
        for (Vertex p : g.parents(v)) queue.emplace_back(p, true);
    }
  }
  return true;
}

std::vector<VertexSet> minimal_separators(const Graph& g, Vertex i, Vertex j) {
  if (g.adjacent(i, j))
    throw Error(ErrorCode::AdjacentPair, std::to_string(i) + " and " + std::to_string(j) + " are adjacent");
  std::vector<Vertex> others;
  for (std::size_t v = 1; v <= g.n_vertices(); ++v)
    if (static_cast<Vertex>(v) != i && static_cast<Vertex>(v) != j) others.push_back(static_cast<Vertex>(v));
  if (others.size() > 24) throw Error(ErrorCode::IndexOutOfRange, "separator enumeration limited to 26 vertices");
  auto separates = [&](const VertexSet& c) {
    return g.directed() ? d_separated(g, {i}, {j}, c) : is_separated(g, {i}, {j}, c);
  };
  std::vector<VertexSet> separators;
  const std::size_t total = std::size_t{1} << others.size();
  // Visit subsets by size so every separator is compared against all smaller ones.
  std::vector<std::size_t> masks(total);
  for (std::size_t m = 0; m < total; ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::size_t a, std::size_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  std::vector<std::size_t> found;
  for (std::size_t m : masks) {
    bool dominated = std::any_of(found.begin(), found.end(), [m](std::size_t f) { return (f & m) == f; });
    if (dominated) continue;
    VertexSet c;
    for (std::size_t k = 0; k < others.size(); ++k)
      if (m >> k & 1U) c.push_back(others[k]);
    if (separates(c)) {
      found.push_back(m);
      separators.push_back(std::move(c));
    }
  }
  std::sort(separators.begin(), separators.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return separators;
}

// ---- phylogenetic networks --------------------------------------------------

std::size_t PhyloNetwork::edge_index(const Edge& e) const {
  auto it = std::find(indexed_edges.begin(), indexed_edges.end(), e);
  if (it == indexed_edges.end()) throw Error(ErrorCode::NoSuchEdge, "no edge " + to_string(e));
  return static_cast<std::size_t>(it - indexed_edges.begin()) + 1;
}

bool PhyloNetwork::is_leaf(Vertex v) const { return std::binary_search(leaves.begin(), leaves.end(), v); }

namespace {

// Biconnected components of the underlying undirected multigraph, each with
// its edge count and vertex count (Hopcroft-Tarjan low-link).
std::vector<std::pair<std::size_t, std::size_t>> biconnected_sizes(const Graph& g) {
  const std::size_t n = g.n_vertices();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n + 1);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    adj[static_cast<std::size_t>(e.source)].emplace_back(e.target, k);
    adj[static_cast<std::size_t>(e.target)].emplace_back(e.source, k);
  }
  std::vector<int> disc(n + 1, -1);
  std::vector<int> low(n + 1, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int timer = 0;
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex u, std::size_t parent_edge) {
    auto ui = static_cast<std::size_t>(u);
    disc[ui] = low[ui] = timer++;
    for (auto [w, k] : adj[ui]) {
      if (k == parent_edge) continue;
      auto wi = static_cast<std::size_t>(w);
      if (disc[wi] == -1) {
        edge_stack.push_back(k);
        dfs(w, k);
        low[ui] = std::min(low[ui], low[wi]);
        if (low[wi] >= disc[ui]) {
          std::set<Vertex> verts;
          std::size_t count = 0;
          for (;;) {
            std::size_t top = edge_stack.back();
            edge_stack.pop_back();
            ++count;
            verts.insert(g.edges()[top].source);
            verts.insert(g.edges()[top].target);
            if (top == k) break;
          }
          out.emplace_back(count, verts.size());
        }
      } else if (disc[wi] < disc[ui]) {
        edge_stack.push_back(k);
        low[ui] = std::min(low[ui], disc[wi]);
      }
    }
  };
  for (std::size_t v = 1; v <= n; ++v)
    if (disc[v] == -1) dfs(static_cast<Vertex>(v), static_cast<std::size_t>(-1));
  return out;
}

}  // namespace

PhyloNetwork phylo_validate(const Graph& g) {
  if (!g.directed()) throw Error(ErrorCode::UnsupportedGraphKind, "phylogenetic networks are directed");
  if (!g.is_acyclic()) throw Error(ErrorCode::CyclicGraph, "phylogenetic network has a directed cycle");
  PhyloNetwork net;
  net.graph = g;
  std::vector<Vertex> roots;
  for (std::size_t v = 1; v <= g.n_vertices(); ++v) {
    auto vv = static_cast<Vertex>(v);
    std::size_t in = g.in_degree(vv);
    std::size_t out = g.out_degree(vv);
    if (in == 0 && out == 0) throw Error(ErrorCode::NotLevelOne, "isolated vertex " + std::to_string(v));
    if (in == 0) roots.push_back(vv);
    if (out == 0) net.leaves.push_back(vv);
    if (in >= 2) net.hybrid_nodes.push_back(vv);
  }
  if (roots.size() != 1)
    throw Error(ErrorCode::MultipleRoots, std::to_string(roots.size()) + " vertices have in-degree 0");
  net.root = roots.front();
  for (auto [edges, verts] : biconnected_sizes(g))
    if (edges + 1 > verts + 1)
      throw Error(ErrorCode::NotLevelOne, "a biconnected component contains more than one cycle");
  for (Vertex h : net.hybrid_nodes) {
    std::vector<Edge> in;
    for (const auto& e : g.edges())
      if (e.target == h) in.push_back(e);
    net.hybrid_parent_edges.push_back(std::move(in));
  }
  for (Vertex leaf : net.leaves)
    for (const auto& e : g.edges())
      if (e.target == leaf) net.indexed_edges.push_back(e);
  for (const auto& e : g.edges())
    if (!net.is_leaf(e.target)) net.indexed_edges.push_back(e);
  return net;
}

std::vector<DisplayedTree> displayed_trees(const PhyloNetwork& net) {
  std::vector<DisplayedTree> out;
  std::vector<std::size_t> choice(net.hybrid_nodes.size(), 0);
  for (;;) {
    std::set<Edge> dropped;
    DisplayedTree t;
    t.choice = choice;
    for (std::size_t h = 0; h < net.hybrid_nodes.size(); ++h) {
      const auto& parents = net.hybrid_parent_edges[h];
      for (std::size_t k = 0; k < parents.size(); ++k)
        if (k != choice[h]) dropped.insert(parents[k]);
      t.kept[net.hybrid_nodes[h]] = parents[choice[h]];
    }
    std::vector<Edge> kept;
    for (const auto& e : net.graph.edges())
      if (!dropped.count(e)) kept.push_back(e);
    t.tree = phylo_validate(Graph(GraphKind::Directed, net.graph.n_vertices(), kept));
    out.push_back(std::move(t));
    // Odometer with the last hybrid node varying fastest.
    std::size_t pos = choice.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < net.hybrid_parent_edges[pos].size()) break;
      choice[pos] = 0;
      if (pos == 0) return out;
    }
    if (choice.empty()) return out;
  }
}

}  // namespace algstat
