#include "evencycle/generators.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "evencycle/error.hpp"
#include "evencycle/rng.hpp"

namespace evencycle {

namespace {

std::vector<Vertex> shuffled(std::size_t n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
  return p;
}

// Consecutive blocks of vertex ids, one per layer.
struct Builder {
  std::size_t n = 0;
  std::vector<Edge> edges;

  std::vector<Vertex> block(std::size_t size) {
    std::vector<Vertex> out(size);
    std::iota(out.begin(), out.end(), static_cast<Vertex>(n));
    n += size;
    return out;
  }
  void join(Vertex u, Vertex v) { edges.emplace_back(std::min(u, v), std::max(u, v)); }
  void complete(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a) {
      for (Vertex v : b) join(u, v);
    }
  }
};

std::vector<Vertex> concat(std::vector<Vertex> a, const std::vector<Vertex>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void finish(LayeredFixture& f, Builder& b, const std::array<std::vector<Vertex>, 3>& layers,
            std::uint64_t seed) {
  Rng rng(seed);
  const auto pi = shuffled(b.n, rng);
  std::vector<Edge> edges;
  edges.reserve(b.edges.size());
  for (auto [u, v] : b.edges) edges.emplace_back(std::min(pi[u], pi[v]), std::max(pi[u], pi[v]));
  std::sort(edges.begin(), edges.end());
  f.graph = Graph::from_edges(b.n, edges);
  for (std::size_t i = 0; i < 3; ++i) {
    VertexSet s;
    for (Vertex v : layers[i]) s.push_back(pi[v]);
    std::sort(s.begin(), s.end());
    f.layers[i] = std::move(s);
  }
}

// Each round adds |X| fresh V3 vertices joined to two X vertices apiece; every
// X vertex gains exactly two V3 neighbours per round.
void pair_up(Builder& b, const std::vector<Vertex>& X, std::size_t rounds) {
  const std::size_t x = X.size();
  for (std::size_t m = 0; m < rounds; ++m) {
    const auto v3 = b.block(x);
    for (std::size_t first = 0; first < x; ++first) {
      const std::size_t second = (first + 1 + m % (x - 1)) % x;
      b.join(v3[first], X[first]);
      b.join(v3[first], X[second]);
    }
  }
}

LayeredFixture base_fixture(std::string_view kind, std::uint64_t seed) {
  LayeredFixture f;
  f.kind = kind;
  f.k = 3;
  f.d = 1;
  f.a = 0.9;
  Builder b;
  if (kind == "base-subgraph") {
    f.spec = {2, 2, 2, 2};
    f.C = 2;
    const auto v1 = b.block(10), v2 = b.block(10), v3 = b.block(40);
    b.complete(v1, v2);
    b.complete(v2, v3);
    finish(f, b, {v1, v2, v3}, seed);
    return f;
  }
  // Eight V2 vertices with 40 V3 neighbours each; every V3 vertex sees two of
  // them, so the V3 floor of 3 strips V3 and then V2.
  f.spec = {0, 1.5, 2, 3};
  f.C = 2;
  const auto v1 = b.block(kind == "base-theta" ? 40 : 5);
  const auto X = b.block(8);
  b.complete(v1, X);
  const std::size_t before = b.n;
  pair_up(b, X, 20);
  std::vector<Vertex> v3(b.n - before);
  std::iota(v3.begin(), v3.end(), static_cast<Vertex>(before));
  finish(f, b, {v1, X, v3}, seed);
  return f;
}

LayeredFixture chain_fixture(std::string_view kind, std::uint64_t seed) {
  LayeredFixture f;
  f.kind = kind;
  Builder b;
  if (kind == "chain-dense") {
    f.k = 3;
    f.Delta = 0.125;
    f.d = 10;
    f.C = 13;
    const auto v1 = b.block(64), v2 = b.block(60), v3 = b.block(60);
    b.complete(v1, v2);
    b.complete(v2, v3);
    finish(f, b, {v1, v2, v3}, seed);
    return f;
  }
  // One step of length t = 1: Y falls to the V1 floor, the V3 vertices keep
  // only the two X vertices and fall to the V3 floor, then X empties out.
  f.k = 10;
  f.Delta = 0.025;
  f.d = 12000;
  f.C = 1;
  f.steps = 1;
  const auto v1a = b.block(399), v1b = b.block(13);
  const auto X = b.block(2), Y = b.block(12);
  const auto v3 = b.block(12401);
  b.complete(v1a, X);
  b.complete(v1b, Y);
  b.complete(concat(X, Y), v3);
  finish(f, b, {concat(v1a, v1b), concat(X, Y), v3}, seed);
  return f;
}

LayeredFixture embed_fixture(std::string_view kind, std::uint64_t seed) {
  LayeredFixture f;
  f.kind = kind;
  f.k = 3;
  Builder b;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  if (kind == "embed-d1") {
    f.d = 1;
    f.Delta = 6;
    f.embed = {6, 10, 1, 6, 1, 3};
    const auto v1 = b.block(10 + uniform_below(rng, 5));
    const auto v2 = b.block(6 + uniform_below(rng, 5));
    const auto pool = b.block(2 * v2.size());
    b.complete(v1, v2);
    std::vector<char> used(pool.size(), 0);
    for (Vertex u : v2) {
      const std::size_t want = 4 + uniform_below(rng, 3);
      const auto order = shuffled(pool.size(), rng);
      for (std::size_t j = 0; j < want; ++j) {
        b.join(u, pool[order[j]]);
        used[order[j]] = 1;
      }
    }
    // Unused pool vertices stay isolated outside every layer.
    std::vector<Vertex> v3;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (used[j]) v3.push_back(pool[j]);
    }
    finish(f, b, {v1, v2, v3}, seed);
    return f;
  }
  // embed-d2: every V2 vertex has exactly nine V3 neighbours, every V3 vertex six.
  f.d = 6;
  f.Delta = 1.5;
  f.embed = {18, 7, 2, 1.5, 6, 3};
  const auto v1 = b.block(8), v2 = b.block(20), v3 = b.block(30);
  b.complete(v1, v2);
  for (std::size_t i = 0; i < v2.size(); ++i) {
    for (std::size_t r = 0; r < 9; ++r) b.join(v2[i], v3[(3 * i + r) % v3.size()]);
  }
  finish(f, b, {v1, v2, v3}, seed);
  return f;
}

}  // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw PreconditionError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw PreconditionError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) {
      if (bernoulli(rng, p)) edges.emplace_back(u, static_cast<Vertex>(a + j));
    }
  }
  return Graph::from_edges(a + b, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(u, static_cast<Vertex>(a + j));
  }
  return Graph::from_edges(a + b, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);       // outer 5-cycle
    edges.emplace_back(i, i + 5);             // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  return Graph::from_edges(10, edges);
}

Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed) {
  if ((n * r) % 2 != 0 || r >= n) throw PreconditionError("no simple r-regular graph on n vertices");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), r, v);
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const Vertex u = std::min(stubs[i], stubs[i + 1]), v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v;
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(n, edges);
  }
  throw PreconditionError("pairing model did not produce a simple graph");
}

const std::vector<std::string>& fixture_kinds() {
  static const std::vector<std::string> kinds{"base-shrunk",  "base-theta", "base-subgraph",
                                              "chain-dense",  "chain-shrunk", "embed-d1",
                                              "embed-d2"};
  return kinds;
}

LayeredFixture trilayer_fixture(std::string_view kind, std::uint64_t seed) {
  if (kind == "base-shrunk" || kind == "base-theta" || kind == "base-subgraph") {
    return base_fixture(kind, seed);
  }
  if (kind == "chain-dense" || kind == "chain-shrunk") return chain_fixture(kind, seed);
  if (kind == "embed-d1" || kind == "embed-d2") return embed_fixture(kind, seed);
  throw PreconditionError("unknown fixture kind '" + std::string(kind) + "'");
}

void write_fixture(std::ostream& out, const LayeredFixture& f) {
  for (int i = 0; i < 3; ++i) {
    out << "#L" << i + 1;
    for (Vertex v : f.layers[static_cast<std::size_t>(i)]) out << ' ' << v;
    out << '\n';
  }
  nlohmann::ordered_json p;
  p["kind"] = f.kind;
  p["k"] = f.k;
  p["d"] = f.d;
  p["Delta"] = f.Delta;
  p["C"] = f.C;
  if (f.kind.starts_with("base-")) {
    p["a"] = f.a;
    p["spec"] = {f.spec.A, f.spec.B, f.spec.C, f.spec.D};
  }
  if (f.steps) p["steps"] = *f.steps;
  if (f.kind.starts_with("embed-")) {
    p["A"] = f.embed.A;
    p["B"] = f.embed.B;
    p["D"] = f.embed.D;
  }
  out << "#P " << p.dump() << '\n';
  write_edge_list(out, f.graph);
}

FixtureHeader parse_fixture_header(std::string_view text) {
  FixtureHeader h;
  std::array<VertexSet, 3> layers;
  std::array<bool, 3> seen{false, false, false};
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.size() >= 3 && line[0] == '#' && line[1] == 'L' && line[2] >= '1' && line[2] <= '3') {
      const std::size_t i = static_cast<std::size_t>(line[2] - '1');
      std::istringstream is{std::string(line.substr(3))};
      long long v;
      VertexSet s;
      while (is >> v) {
        if (v < 0) throw ParseError("negative vertex id in layer line", line_no);
        s.push_back(static_cast<Vertex>(v));
      }
      if (!is.eof()) throw ParseError("malformed layer line", line_no);
      std::sort(s.begin(), s.end());
      layers[i] = std::move(s);
      seen[i] = true;
    } else if (line.starts_with("#P ")) {
      h.params = std::string(line.substr(3));
    }
  }
  if (seen[0] && seen[1] && seen[2]) h.layers = std::move(layers);
  else if (seen[0] || seen[1] || seen[2]) throw ParseError("fixture needs all three layer lines", line_no);
  return h;
}

}  // namespace evencycle
