#include <doctest.h>

#include "evencycle/error.hpp"
#include "evencycle/generators.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/theta.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

BipartiteView whole(const Graph& g, std::size_t left) {
  VertexSet l, r;
  for (Vertex v = 0; v < g.order(); ++v) (v < left ? l : r).push_back(v);
  return BipartiteView(g, l, r);
}

}  // namespace

TEST_SUITE("theta") {
  TEST_CASE("verify_theta rejects each kind of defect") {
    const Graph g = complete_bipartite(3, 3);  // left 0..2, right 3..5
    const ThetaCertificate good{{0, 3, 1, 4, 2, 5}, {0, 4}};
    CHECK(verify_theta(g, good, 3));
    CHECK_FALSE(verify_theta(g, good, 4));                               // too short for k
    CHECK_FALSE(verify_theta(g, {{0, 3, 1, 4, 2, 5}, {0, 3}}, 3));       // consecutive
    CHECK_FALSE(verify_theta(g, {{0, 3, 1, 4, 2, 5}, {0, 1}}, 3));       // not an edge
    CHECK_FALSE(verify_theta(g, {{0, 3, 1, 4, 0, 5}, {0, 4}}, 3));       // repeated vertex
    CHECK_FALSE(verify_theta(g, {{0, 3, 1, 4, 2, 0}, {0, 4}}, 3));
    CHECK_FALSE(verify_theta(g, {{0, 1, 3, 4, 2, 5}, {0, 4}}, 3));       // non-edge on the cycle
    CHECK_FALSE(verify_theta(g, {{0, 3, 1, 4, 2, 5}, {0, 9}}, 3));       // chord off the cycle
  }

  TEST_CASE("min-degree finder on complete bipartite graphs") {
    for (std::size_t a = 3; a <= 6; ++a) {
      const Graph g = complete_bipartite(a, a + 1);
      const ThetaCertificate c = find_theta_min_degree(whole(g, a), 3);
      CHECK(verify_theta(g, c, 3));
      CHECK(oracle::is_theta(g, c, 3));
    }
  }

  TEST_CASE("min-degree finder on random dense bipartite graphs") {
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 200 && tested < 40; ++seed) {
      const Graph g = random_bipartite(10, 12, 0.55, seed);
      const BipartiteView b = whole(g, 10);
      bool ok = true;
      for (Vertex v = 0; v < g.order(); ++v) ok = ok && g.degree(v) >= 4;
      if (!ok) continue;
      ++tested;
      const ThetaCertificate c = find_theta_min_degree(b, 4);
      CHECK(oracle::is_theta(g, c, 4));
    }
    CHECK(tested >= 20);
  }

  TEST_CASE("min-degree finder names a low-degree vertex") {
    const Graph g = complete_bipartite(2, 5);
    try {
      find_theta_min_degree(whole(g, 2), 3);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("vertex") != std::string::npos);
    }
    CHECK_THROWS_AS(find_theta_min_degree(whole(complete_bipartite(3, 3), 3), 2), PreconditionError);
  }

  TEST_CASE("peeling yields the unique maximal core") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Graph g = random_graph(60, 0.08, seed);
      const PeelResult base = peel_min_degree(g, 3);
      for (Vertex v = 0; v < base.core.graph.order(); ++v) CHECK(base.core.graph.degree(v) >= 3);
      for (std::uint64_t s = 1; s <= 5; ++s) {
        CHECK(peel_min_degree(g, 3, s).core.to_parent == base.core.to_parent);
      }
      CHECK(base.removal_order.size() + base.core.to_parent.size() == g.order());
    }
  }

  TEST_CASE("avg-degree finder peels first") {
    // K_{8,8} with a pendant path 0-16-17-18; the path vertices have degree < k.
    std::vector<Edge> e = complete_bipartite(8, 8).edges();
    e.insert(e.end(), {{0, 16}, {16, 17}, {17, 18}});
    const Graph g = Graph::from_edges(19, e);
    const BipartiteView b(g, {0, 1, 2, 3, 4, 5, 6, 7, 17}, {8, 9, 10, 11, 12, 13, 14, 15, 16, 18});
    const ThetaCertificate c = find_theta_avg_degree(b, 3);
    CHECK(oracle::is_theta(g, c, 3));
    for (Vertex v : c.cycle) CHECK(v < 16);
    const Graph sparse = complete_bipartite(3, 9);
    CHECK_THROWS_AS(find_theta_avg_degree(whole(sparse, 3), 3), PreconditionError);
  }

  TEST_CASE("k-core finder returns nothing on forests") {
    const Graph p = path_graph(10);
    CHECK_FALSE(find_theta_k_core(whole(p, 5), 3).has_value());
  }

  TEST_CASE("well-placed witnesses") {
    // V1 = {0,1,2}, V2 = {3,4}, V3 = {5,6,7}; theta on V2 u V3 plus V1 anchors.
    const std::vector<Edge> e{{0, 3}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {3, 6}, {3, 7},
                              {4, 5}, {4, 6}, {4, 7}};
    const Graph g = Graph::from_edges(8, e);
    const TrilayeredView t(g, {0, 1, 2}, {3, 4}, {5, 6, 7});
    const ThetaCertificate c{{3, 5, 4, 6}, {3, 7}};
    CHECK_FALSE(verify_theta_in_view(t, c, 2));  // 3-7 is not a chord of this cycle
    const ThetaCertificate c2{{3, 5, 4, 7}, {3, 4}};
    CHECK_FALSE(verify_theta_in_view(t, c2, 2)); // 3-4 is not an edge
    const ThetaCertificate c3{{0, 3, 1, 4}, {0, 4}};
    CHECK_FALSE(verify_theta_in_view(t, c3, 2));

    const Graph k33 = complete_bipartite(3, 3);  // V2 = {0,1,2}
    const std::vector<Edge> extra{{0, 6}, {1, 7}, {2, 8}};
    std::vector<Edge> all = k33.edges();
    all.insert(all.end(), extra.begin(), extra.end());
    const Graph h = Graph::from_edges(9, all);
    const TrilayeredView u(h, {6, 7, 8}, {0, 1, 2}, {3, 4, 5});
    const ThetaCertificate th{{0, 3, 1, 4, 2, 5}, {0, 4}};
    const auto w = well_placed_witness(u, th);
    REQUIRE(w.has_value());
    CHECK(w->at(0) == 6);
    CHECK(verify_well_placed(u, th, *w, 3));
    CHECK(oracle::is_well_placed(h, {VertexSet{6, 7, 8}, VertexSet{0, 1, 2}, VertexSet{3, 4, 5}}, th, *w, 3));
    WellPlacedWitness bad = *w;
    bad[0] = 7;  // not adjacent
    CHECK_FALSE(verify_well_placed(u, th, bad, 3));
    bad = *w;
    bad.erase(2);
    CHECK_FALSE(verify_well_placed(u, th, bad, 3));
  }
}
