#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace evencycle {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges and
  /// out-of-range endpoints with PreconditionError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t edges = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Induced subgraph with a map back to the parent's labels.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new label -> parent label

  Vertex lift(Vertex v) const { return to_parent[v]; }
};

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices);

enum class Side : std::uint8_t { None = 0, Left = 1, Right = 2 };

/// Two disjoint vertex classes of a base graph; only edges across the classes
/// are retained. The base graph must outlive the view.
class BipartiteView {
 public:
  BipartiteView(const Graph& base, VertexSet left, VertexSet right);

  const Graph& base() const noexcept { return *base_; }
  const VertexSet& left() const noexcept { return left_; }
  const VertexSet& right() const noexcept { return right_; }
  Side side(Vertex v) const { return side_[v]; }

  bool retains(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return left_.size() + right_.size(); }

  /// The retained edges as a graph on the same vertex labels.
  Graph materialize() const;

 private:
  const Graph* base_;
  VertexSet left_, right_;
  std::vector<Side> side_;
  std::size_t edges_ = 0;
};

/// Greedy placement followed by local switching until no vertex has more
/// neighbours on its own side than across. Retains at least ceil(m/2) edges.
BipartiteView bipartite_half(const Graph& g);

/// Three pairwise-disjoint layers of a base graph. Only V1-V2 and V2-V3 edges
/// are retained. The base graph must outlive the view.
class TrilayeredView {
 public:
  TrilayeredView(const Graph& base, VertexSet v1, VertexSet v2, VertexSet v3);

  const Graph& base() const noexcept { return *base_; }
  const VertexSet& layer(int i) const { return layers_[static_cast<std::size_t>(i - 1)]; }
  const VertexSet& v1() const noexcept { return layers_[0]; }
  const VertexSet& v2() const noexcept { return layers_[1]; }
  const VertexSet& v3() const noexcept { return layers_[2]; }

  /// 1, 2 or 3 for vertices of the view, 0 otherwise.
  int layer_of(Vertex v) const { return v < layer_of_.size() ? layer_of_[v] : 0; }
  bool contains(Vertex v) const { return layer_of(v) != 0; }

  bool retains(Vertex u, Vertex v) const;
  /// Retained neighbours of v lying in the given layer, sorted.
  VertexSet neighbors_in(Vertex v, int layer) const;
  std::size_t degree_to(Vertex v, int layer) const;
  /// Number of retained edges between two adjacent layers (1,2) or (2,3).
  std::size_t edge_count(int a, int b) const;
  std::size_t edge_count() const { return edge_count(1, 2) + edge_count(2, 3); }

  /// View on subsets of the current layers, over the same base graph.
  TrilayeredView restrict(VertexSet v1, VertexSet v2, VertexSet v3) const;

  Graph materialize() const;

 private:
  const Graph* base_;
  std::vector<VertexSet> layers_;
  std::vector<std::uint8_t> layer_of_;
};

/// Breadth-first levels V_0 = {root}, V_1, ..., V_k by exact distance.
struct LayerDecomposition {
  Vertex root = 0;
  std::vector<VertexSet> layers;  // layers.size() == k + 1
  std::vector<int> depth;         // -1 when farther than k or unreachable

  int k() const { return static_cast<int>(layers.size()) - 1; }
};

LayerDecomposition bfs_layers(const Graph& g, Vertex root, int k);

/// G[V_{i-1}, V_i, V_{i+1}] for 1 <= i <= k-1.
TrilayeredView trilayer(const Graph& g, const LayerDecomposition& layers, int i);

/// Edge-list text: "u v" per line, '#' comments, optional "p <n> <m>" header.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

bool is_sorted_set(std::span<const Vertex> s);

/// Two-colouring by BFS with colour 0 on the smallest vertex of each
/// component; nullopt when some component has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

}  // namespace evencycle
