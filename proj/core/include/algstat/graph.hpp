#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace algstat {

using Vertex = int;  // 1-based
using VertexSet = std::vector<Vertex>;  // sorted, unique

enum class GraphKind { Directed, Undirected };

struct Edge {
  Vertex source = 0;
  Vertex target = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Vertices 1..n. Undirected edges are stored with source < target.
class Graph {
 public:
  Graph() = default;
  Graph(GraphKind kind, std::size_t n, std::vector<Edge> edges);

  GraphKind kind() const noexcept { return kind_; }
  bool directed() const noexcept { return kind_ == GraphKind::Directed; }
  std::size_t n_vertices() const noexcept { return n_; }
  /// Sorted ascending by (source, target).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  /// Adjacent in either direction.
  bool adjacent(Vertex a, Vertex b) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Vertex> parents(Vertex v) const;
  std::vector<Vertex> children(Vertex v) const;
  std::size_t in_degree(Vertex v) const { return parents(v).size(); }
  std::size_t out_degree(Vertex v) const { return children(v).size(); }
  /// Topological order (directed only); nullopt when cyclic.
  std::optional<std::vector<Vertex>> topological_order() const;
  bool is_acyclic() const { return topological_order().has_value(); }
  std::vector<Vertex> descendants(Vertex v) const;  // includes v

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  GraphKind kind_ = GraphKind::Undirected;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::set<std::pair<Vertex, Vertex>> lookup_;
};

/// n defaults to the largest endpoint. Throws SelfLoop / DuplicateEdge.
Graph graph_from_edges(GraphKind kind, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       std::optional<std::size_t> n = std::nullopt);

/// Vertex and edge labels under one name (e.g. "color").
struct Labeling {
  std::string name;
  std::map<Vertex, std::string> vertex_labels;
  std::map<Edge, std::string> edge_labels;

  bool is_total(const Graph& g) const;
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

bool is_separated(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c);
bool d_separated(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c);

/// Inclusion-minimal separators of the non-adjacent pair (i, j), sorted by
/// size then lexicographically. Directed graphs use d-separation.
std::vector<VertexSet> minimal_separators(const Graph& g, Vertex i, Vertex j);

/// Rooted level-1 phylogenetic network; trees are the hybrid-free case.
struct PhyloNetwork {
  Graph graph;
  Vertex root = 0;
  std::vector<Vertex> leaves;        // ascending
  std::vector<Vertex> hybrid_nodes;  // ascending
  /// Incoming edges per hybrid node, ascending by (source, target).
  std::vector<std::vector<Edge>> hybrid_parent_edges;
  /// Edge numbering used for per-edge parameters: edges into leaves first
  /// (by leaf), then the remaining edges by (source, target).
  std::vector<Edge> indexed_edges;

  bool is_tree() const noexcept { return hybrid_nodes.empty(); }
  /// 1-based index into `indexed_edges`; throws NoSuchEdge.
  std::size_t edge_index(const Edge& e) const;
  bool is_leaf(Vertex v) const;
  friend bool operator==(const PhyloNetwork& a, const PhyloNetwork& b) { return a.graph == b.graph; }
};

PhyloNetwork phylo_validate(const Graph& g);

struct DisplayedTree {
  PhyloNetwork tree;
  /// Per hybrid node (same order as `hybrid_nodes`): index of the kept parent edge.
  std::vector<std::size_t> choice;
  std::map<Vertex, Edge> kept;
};

/// One tree per combination of kept hybrid-parent edges; the first hybrid
/// node's choice varies slowest.
std::vector<DisplayedTree> displayed_trees(const PhyloNetwork& n);

}  // namespace algstat
