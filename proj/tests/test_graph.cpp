#include <doctest.h>

#include <set>
#include <sstream>

#include "evencycle/error.hpp"
#include "evencycle/generators.hpp"
#include "evencycle/graph.hpp"
#include "oracles.hpp"

using namespace evencycle;

TEST_SUITE("graph") {
  TEST_CASE("from_edges rejects malformed input") {
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    const std::vector<Edge> range{{0, 5}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edges(3, dup), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edges(3, range), PreconditionError);
  }

  TEST_CASE("adjacency is sorted and symmetric") {
    const Graph g = random_graph(30, 0.3, 7);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) CHECK(g.has_edge(w, v));
      sum += nb.size();
    }
    CHECK(sum == 2 * g.size());
    CHECK(g.edges().size() == g.size());
  }

  TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("# triangle plus isolated\np 4 3\n0 1\n1 2 # trailing\n\n2 0\n");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.degree(3) == 0);

    const Graph h = parse_edge_list("3 5\n");
    CHECK(h.order() == 6);

    auto line_of = [](std::string_view text) -> std::size_t {
      try {
        parse_edge_list(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("0 1\n2 2\n") == 2);
    CHECK(line_of("0 1\n1 0\n") == 2);
    CHECK(line_of("0 1\n1\n") == 2);
    CHECK(line_of("0 x\n") == 1);
    CHECK(line_of("p 2 1\n0 5\n") == 1);
    CHECK(line_of("p 3 2\n0 1\n") == 1);
  }

  TEST_CASE("write then parse round-trips") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = random_graph(25, 0.2, seed);
      std::ostringstream os;
      write_edge_list(os, g);
      CHECK(parse_edge_list(os.str()) == g);
    }
    const Graph isolated(5);
    std::ostringstream os;
    write_edge_list(os, isolated);
    CHECK(parse_edge_list(os.str()).order() == 5);
  }

  TEST_CASE("induced subgraph keeps exactly the inner edges") {
    const Graph g = random_graph(20, 0.4, 3);
    const VertexSet keep{1, 4, 5, 9, 12, 17};
    const InducedSubgraph s = induced(g, keep);
    CHECK(s.to_parent == keep);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        expected += g.has_edge(keep[i], keep[j]);
        CHECK(s.graph.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) == g.has_edge(keep[i], keep[j]));
      }
    }
    CHECK(s.graph.size() == expected);
  }

  TEST_CASE("BFS layers match brute-force distances") {
    const Graph c6 = cycle_graph(6);
    const auto L = bfs_layers(c6, 0, 3);
    REQUIRE(L.layers.size() == 4);
    CHECK(L.layers[1] == VertexSet{1, 5});
    CHECK(L.layers[2] == VertexSet{2, 4});
    CHECK(L.layers[3] == VertexSet{3});

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Graph g = random_graph(40, 0.08, seed);
      const auto dist = oracle::distances(g, 0);
      const auto D = bfs_layers(g, 0, 4);
      for (Vertex v = 0; v < g.order(); ++v) {
        const int expect = dist[v] >= 0 && dist[v] <= 4 ? dist[v] : -1;
        CHECK(D.depth[v] == expect);
        if (expect >= 0) {
          const auto& layer = D.layers[static_cast<std::size_t>(expect)];
          CHECK(std::binary_search(layer.begin(), layer.end(), v));
        }
      }
    }
  }

  TEST_CASE("trilayer drops edges inside a layer") {
    // Root 0; 1 and 2 at distance 1 and adjacent to each other.
    const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}};
    const Graph g = Graph::from_edges(5, e);
    const auto L = bfs_layers(g, 0, 2);
    const TrilayeredView t = trilayer(g, L, 1);
    CHECK(t.v1() == VertexSet{0});
    CHECK(t.v2() == VertexSet{1, 2});
    CHECK(t.v3() == VertexSet{3, 4});
    CHECK_FALSE(t.retains(1, 2));
    CHECK_FALSE(t.retains(3, 4));
    CHECK(t.retains(1, 3));
    CHECK(t.edge_count(1, 2) == 2);
    CHECK(t.edge_count(2, 3) == 2);
    CHECK(t.materialize().size() == 4);
  }

  TEST_CASE("trilayer views agree with brute-force counts") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const Graph g = random_graph(35, 0.12, seed);
      const auto L = bfs_layers(g, 0, 3);
      for (int i = 1; i <= 2; ++i) {
        const TrilayeredView t = trilayer(g, L, i);
        const std::set<Vertex> a(t.v1().begin(), t.v1().end()), b(t.v2().begin(), t.v2().end()),
            c(t.v3().begin(), t.v3().end());
        CHECK(t.edge_count(1, 2) == oracle::count_between(g, a, b));
        CHECK(t.edge_count(2, 3) == oracle::count_between(g, b, c));
        for (Vertex v : t.v2()) {
          std::size_t up = 0;
          for (Vertex w : g.neighbors(v)) up += a.count(w);
          CHECK(t.degree_to(v, 1) == up);
        }
      }
    }
  }

  TEST_CASE("bipartite_half keeps at least half the edges") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = random_graph(40, 0.2, seed);
      const BipartiteView b = bipartite_half(g);
      CHECK(2 * b.edge_count() >= g.size());
      CHECK(b.vertex_count() == g.order());
      const std::set<Vertex> l(b.left().begin(), b.left().end()), r(b.right().begin(), b.right().end());
      CHECK(b.edge_count() == oracle::count_between(g, l, r));
      for (Vertex v = 0; v < g.order(); ++v) {
        // No vertex could gain by switching sides.
        std::size_t same = 0, across = 0;
        for (Vertex w : g.neighbors(v)) (b.side(w) == b.side(v) ? same : across) += 1;
        CHECK(same <= across);
      }
    }
  }

  TEST_CASE("bipartition") {
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
    const auto parts = bipartition(cycle_graph(6));
    REQUIRE(parts.has_value());
    CHECK(parts->first == VertexSet{0, 2, 4});
    CHECK(parts->second == VertexSet{1, 3, 5});
    CHECK(bipartition(complete_bipartite(3, 4))->first == VertexSet{0, 1, 2});
  }

  TEST_CASE("generators") {
    CHECK(petersen().size() == 15);
    CHECK(complete_bipartite(3, 4).size() == 12);
    CHECK(path_graph(5).size() == 4);
    const Graph r = random_regular(20, 3, 11);
    for (Vertex v = 0; v < r.order(); ++v) CHECK(r.degree(v) == 3);
    CHECK(random_graph(30, 0.3, 5) == random_graph(30, 0.3, 5));
    CHECK_FALSE(random_graph(30, 0.3, 5) == random_graph(30, 0.3, 6));
    const Graph b = random_bipartite(6, 7, 0.5, 2);
    for (auto [u, v] : b.edges()) CHECK((u < 6) != (v < 6));
  }

  TEST_CASE("fixture files carry layers and parameters") {
    const LayeredFixture f = trilayer_fixture("base-theta", 3);
    std::ostringstream os;
    write_fixture(os, f);
    const FixtureHeader h = parse_fixture_header(os.str());
    REQUIRE(h.layers.has_value());
    CHECK(*h.layers == f.layers);
    CHECK(h.params.has_value());
    CHECK(parse_edge_list(os.str()) == f.graph);
  }
}
