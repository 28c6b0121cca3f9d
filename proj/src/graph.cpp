#include "evencycle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>

#include "evencycle/error.hpp"

namespace evencycle {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range (n = " +
                            std::to_string(g.order()) + ")");
  }
}

VertexSet normalize(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

bool is_sorted_set(std::span<const Vertex> s) {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint out of range");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    if (auto it = std::adjacent_find(a.begin(), a.end()); it != a.end()) {
      throw PreconditionError("duplicate edge (" + std::to_string(v) + ", " +
                              std::to_string(*it) + ")");
    }
  }
  g.m_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.edges = g.size();
  if (g.empty()) return s;
  s.min_degree = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

InducedSubgraph induced(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_parent = normalize(VertexSet(vertices.begin(), vertices.end()));
  std::vector<Vertex> to_child(g.order(), std::numeric_limits<Vertex>::max());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    check_vertex(g, out.to_parent[i]);
    to_child[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(out.to_parent[i])) {
      const Vertex j = to_child[w];
      if (j != std::numeric_limits<Vertex>::max() && i < j) {
        edges.emplace_back(static_cast<Vertex>(i), j);
      }
    }
  }
  out.graph = Graph::from_edges(out.to_parent.size(), edges);
  return out;
}

// ---------------------------------------------------------------------------
// BipartiteView

BipartiteView::BipartiteView(const Graph& base, VertexSet left, VertexSet right)
    : base_(&base),
      left_(normalize(std::move(left))),
      right_(normalize(std::move(right))),
      side_(base.order(), Side::None) {
  for (Vertex v : left_) {
    check_vertex(base, v);
    side_[v] = Side::Left;
  }
  for (Vertex v : right_) {
    check_vertex(base, v);
    if (side_[v] == Side::Left) {
      throw PreconditionError("vertex " + std::to_string(v) + " is on both sides");
    }
    side_[v] = Side::Right;
  }
  for (Vertex v : left_) edges_ += degree(v);
}

bool BipartiteView::retains(Vertex u, Vertex v) const {
  if (u >= side_.size() || v >= side_.size()) return false;
  const Side a = side_[u], b = side_[v];
  return a != Side::None && b != Side::None && a != b && base_->has_edge(u, v);
}

std::size_t BipartiteView::degree(Vertex v) const {
  const Side s = side_[v];
  if (s == Side::None) return 0;
  std::size_t d = 0;
  for (Vertex w : base_->neighbors(v)) {
    if (side_[w] != Side::None && side_[w] != s) ++d;
  }
  return d;
}

Graph BipartiteView::materialize() const {
  std::vector<Edge> edges;
  edges.reserve(edges_);
  for (Vertex u : left_) {
    for (Vertex v : base_->neighbors(u)) {
      if (side_[v] == Side::Right) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph::from_edges(base_->order(), edges);
}

BipartiteView bipartite_half(const Graph& g) {
  if (g.empty()) throw PreconditionError("bipartite_half needs a nonempty graph");
  const std::size_t n = g.order();
  std::vector<Side> side(n, Side::None);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t on_left = 0, on_right = 0;
    for (Vertex w : g.neighbors(v)) {
      if (side[w] == Side::Left) ++on_left;
      if (side[w] == Side::Right) ++on_right;
    }
    side[v] = on_left <= on_right ? Side::Left : Side::Right;
  }
  // Local switching: each flip strictly increases the cut, so this terminates.
  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t same = 0;
      for (Vertex w : g.neighbors(v)) same += side[w] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] = side[v] == Side::Left ? Side::Right : Side::Left;
        moved = true;
        break;
      }
    }
  }
  VertexSet left, right;
  for (Vertex v = 0; v < n; ++v) (side[v] == Side::Left ? left : right).push_back(v);
  return BipartiteView(g, std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------
// TrilayeredView

TrilayeredView::TrilayeredView(const Graph& base, VertexSet v1, VertexSet v2, VertexSet v3)
    : base_(&base), layer_of_(base.order(), 0) {
  layers_.push_back(normalize(std::move(v1)));
  layers_.push_back(normalize(std::move(v2)));
  layers_.push_back(normalize(std::move(v3)));
  for (int i = 0; i < 3; ++i) {
    for (Vertex v : layers_[static_cast<std::size_t>(i)]) {
      check_vertex(base, v);
      if (layer_of_[v] != 0) {
        throw PreconditionError("vertex " + std::to_string(v) + " is in two layers");
      }
      layer_of_[v] = static_cast<std::uint8_t>(i + 1);
    }
  }
}

bool TrilayeredView::retains(Vertex u, Vertex v) const {
  const int a = layer_of(u), b = layer_of(v);
  if (a == 0 || b == 0) return false;
  if (!((a == 2 && b != 2) || (b == 2 && a != 2))) return false;
  return base_->has_edge(u, v);
}

VertexSet TrilayeredView::neighbors_in(Vertex v, int layer) const {
  VertexSet out;
  const int own = layer_of(v);
  if (own == 0 || std::abs(own - layer) != 1) return out;
  for (Vertex w : base_->neighbors(v)) {
    if (layer_of_[w] == layer) out.push_back(w);
  }
  return out;
}

std::size_t TrilayeredView::degree_to(Vertex v, int layer) const {
  const int own = layer_of(v);
  if (own == 0 || std::abs(own - layer) != 1) return 0;
  std::size_t d = 0;
  for (Vertex w : base_->neighbors(v)) d += layer_of_[w] == layer;
  return d;
}

std::size_t TrilayeredView::edge_count(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (!((a == 1 && b == 2) || (a == 2 && b == 3))) return 0;
  std::size_t e = 0;
  for (Vertex v : layer(a)) e += degree_to(v, b);
  return e;
}

TrilayeredView TrilayeredView::restrict(VertexSet v1, VertexSet v2, VertexSet v3) const {
  auto check = [&](const VertexSet& s, int l) {
    for (Vertex v : s) {
      if (layer_of(v) != l) {
        throw PreconditionError("vertex " + std::to_string(v) + " is not in layer " +
                                std::to_string(l));
      }
    }
  };
  check(v1, 1);
  check(v2, 2);
  check(v3, 3);
  return TrilayeredView(*base_, std::move(v1), std::move(v2), std::move(v3));
}

Graph TrilayeredView::materialize() const {
  std::vector<Edge> edges;
  for (Vertex u : v2()) {
    for (Vertex w : base_->neighbors(u)) {
      if (layer_of_[w] == 1 || layer_of_[w] == 3) edges.emplace_back(std::min(u, w), std::max(u, w));
    }
  }
  return Graph::from_edges(base_->order(), edges);
}

// ---------------------------------------------------------------------------
// BFS layering

LayerDecomposition bfs_layers(const Graph& g, Vertex root, int k) {
  check_vertex(g, root);
  if (k < 0) throw PreconditionError("bfs depth must be non-negative");
  LayerDecomposition out;
  out.root = root;
  out.layers.assign(static_cast<std::size_t>(k) + 1, {});
  out.depth.assign(g.order(), -1);
  out.depth[root] = 0;
  out.layers[0].push_back(root);
  for (int i = 0; i < k; ++i) {
    auto& next = out.layers[static_cast<std::size_t>(i) + 1];
    for (Vertex v : out.layers[static_cast<std::size_t>(i)]) {
      for (Vertex w : g.neighbors(v)) {
        if (out.depth[w] == -1) {
          out.depth[w] = i + 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
  }
  return out;
}

TrilayeredView trilayer(const Graph& g, const LayerDecomposition& layers, int i) {
  if (i < 1 || i + 1 > layers.k()) {
    throw PreconditionError("trilayer index " + std::to_string(i) + " outside [1, " +
                            std::to_string(layers.k() - 1) + "]");
  }
  const auto at = [&](int j) { return layers.layers[static_cast<std::size_t>(j)]; };
  return TrilayeredView(g, at(i - 1), at(i), at(i + 1));
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("malformed token '" + std::string(tok) + "'", line);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared_n, declared_m;
  std::uint64_t max_id = 0;
  bool any = false;
  std::size_t line_no = 0, header_line = 0;
  std::unordered_set<std::uint64_t> seen;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto toks = tokens(line);
    if (toks[0] == "p") {
      if (toks.size() != 3 || any || declared_n) throw ParseError("malformed header", line_no);
      header_line = line_no;
      declared_n = parse_uint(toks[1], line_no);
      declared_m = parse_uint(toks[2], line_no);
      continue;
    }
    if (toks.size() != 2) throw ParseError("expected two vertex ids", line_no);
    const std::uint64_t u = parse_uint(toks[0], line_no);
    const std::uint64_t v = parse_uint(toks[1], line_no);
    if (u > std::numeric_limits<Vertex>::max() - 1 || v > std::numeric_limits<Vertex>::max() - 1) {
      throw ParseError("vertex id too large", line_no);
    }
    if (u == v) throw ParseError("self-loop", line_no);
    const auto a = static_cast<Vertex>(std::min(u, v));
    const auto b = static_cast<Vertex>(std::max(u, v));
    if (!seen.insert((std::uint64_t{a} << 32) | b).second) {
      throw ParseError("duplicate edge", line_no);
    }
    edges.emplace_back(a, b);
    max_id = std::max<std::uint64_t>(max_id, b);
    any = true;
  }
  std::size_t n = any ? static_cast<std::size_t>(max_id) + 1 : 0;
  if (declared_n) {
    if (any && *declared_n < n) throw ParseError("header declares fewer vertices than used", header_line);
    n = static_cast<std::size_t>(*declared_n);
    if (*declared_m != edges.size()) throw ParseError("header edge count does not match", header_line);
  }
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_edge_list(text);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> out;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? out.first : out.second).push_back(v);
  return out;
}

}  // namespace evencycle
