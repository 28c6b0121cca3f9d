#include <doctest.h>

#include "evencycle/generators.hpp"
#include "evencycle/oracle.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

bool is_cycle(const Graph& g, const Cycle& c, std::size_t len) {
  if (c.size() != len) return false;
  if (std::set<Vertex>(c.begin(), c.end()).size() != len) return false;
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.has_edge(c[i], c[(i + 1) % len])) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("even cycles on named graphs") {
    const auto c6 = find_c2k_exact(cycle_graph(6), 3);
    REQUIRE(c6.found());
    CHECK(*c6.value == Cycle{0, 1, 2, 3, 4, 5});

    CHECK(find_c2k_exact(petersen(), 2).none());   // girth 5
    CHECK(find_c2k_exact(petersen(), 3).found());
    CHECK(find_c2k_exact(petersen(), 4).found());
    CHECK(find_c2k_exact(petersen(), 5).none());   // not Hamiltonian
    CHECK(find_c2k_exact(cycle_graph(8), 3).none());
    CHECK(find_c2k_exact(path_graph(9), 2).none());
  }

  TEST_CASE("cycle search agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const std::size_t n = 6 + seed % 4;
      const Graph g = random_graph(n, 0.35, seed);
      for (int k = 2; k <= 4; ++k) {
        const auto r = find_c2k_exact(g, k);
        REQUIRE_FALSE(r.exceeded());
        CHECK(r.found() == oracle::has_cycle_of_length(g, static_cast<std::size_t>(2 * k)));
        if (r.found()) CHECK(is_cycle(g, *r.value, static_cast<std::size_t>(2 * k)));
      }
    }
  }

  TEST_CASE("enumerate_cycles lists each cycle once") {
    // K4 has three 4-cycles; K_{3,3} has nine 4-cycles and six 6-cycles.
    auto count = [](const Graph& g, std::size_t len) {
      std::size_t c = 0;
      std::uint64_t steps = 0;
      const std::vector<bool> all(g.order(), true);
      enumerate_cycles(g, len, all, [&](const Cycle&) { ++c; return false; }, 1'000'000, steps);
      return c;
    };
    const std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(count(Graph::from_edges(4, k4), 4) == 3);
    CHECK(count(complete_bipartite(3, 3), 4) == 9);
    CHECK(count(complete_bipartite(3, 3), 6) == 6);
  }

  TEST_CASE("budget caps are honoured") {
    const Graph g = random_graph(30, 0.2, 1);
    CHECK(find_c2k_exact(g, 3, SearchBudget{10, 1000}).exceeded());
    const auto tight = find_c2k_exact(random_graph(14, 0.5, 2), 7, SearchBudget{64, 5});
    CHECK(tight.exceeded());
  }

  TEST_CASE("theta search agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const Graph g = random_graph(7 + seed % 3, 0.4, seed + 100);
      for (int k = 2; k <= 4; ++k) {
        const auto r = find_theta_exact(g, k);
        REQUIRE_FALSE(r.exceeded());
        CHECK(r.found() == oracle::has_theta(g, k));
        if (r.found()) CHECK(oracle::is_theta(g, *r.value, k));
      }
    }
  }

  TEST_CASE("theta certificates are canonical") {
    // Shortest admissible cycle first.
    const auto r = find_theta_exact(complete_bipartite(3, 3), 2);
    REQUIRE(r.found());
    CHECK(r.value->cycle.size() == 6);
    CHECK(r.value == find_theta_exact(complete_bipartite(3, 3), 2).value);
  }

  TEST_CASE("girth") {
    CHECK(girth(petersen()) == 5u);
    CHECK(girth(cycle_graph(7)) == 7u);
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK(girth(complete_bipartite(2, 3)) == 4u);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = random_graph(9, 0.3, seed);
      std::optional<std::size_t> brute;
      for (std::size_t len = 3; len <= g.order() && !brute; ++len) {
        if (oracle::has_cycle_of_length(g, len)) brute = len;
      }
      CHECK(girth(g) == brute);
    }
  }

  TEST_CASE("well-placed search agrees with brute force") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Graph g = random_graph(11, 0.45, seed + 500);
      const auto L = bfs_layers(g, 0, 3);
      for (int i = 1; i <= 2; ++i) {
        const TrilayeredView t = trilayer(g, L, i);
        const std::array<VertexSet, 3> layers{t.v1(), t.v2(), t.v3()};
        const auto r = find_well_placed_theta_exact(t, 2);
        REQUIRE_FALSE(r.exceeded());
        CHECK(r.found() == oracle::has_well_placed_theta(g, layers, 2));
        if (r.found()) CHECK(oracle::is_well_placed(g, layers, r.value->theta, r.value->witness, 2));
      }
    }
  }
}
