#include <doctest.h>

#include <cmath>

#include "evencycle/error.hpp"
#include "evencycle/generators.hpp"
#include "evencycle/reduction.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

ReductionParams third() { return ReductionParams::make(Rational(1, 3), Rational(1, 4)); }

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("gamma is exact when 2/alpha is an integer") {
    const auto p = third();
    REQUIRE(p.gamma_exact.has_value());
    CHECK(*p.gamma_exact == rpow(Rational(1, 60), 6));
    CHECK(*ReductionParams::make(Rational(1, 2), 1).gamma_exact == rpow(Rational(1, 40), 4));
    CHECK(*ReductionParams::make(Rational(2, 5), 1).gamma_exact == rpow(Rational(1, 50), 5));

    const auto q = ReductionParams::make(Rational(3, 7), 1);
    CHECK_FALSE(q.gamma_exact.has_value());
    const double expect = std::pow(20.0 / (3.0 / 7.0), -14.0 / 3.0);
    CHECK(static_cast<double>(q.gamma) == doctest::Approx(expect).epsilon(1e-12));
  }

  TEST_CASE("parameters are validated") {
    CHECK_THROWS_AS(ReductionParams::make(0, 1), PreconditionError);
    CHECK_THROWS_AS(ReductionParams::make(1, 1), PreconditionError);
    CHECK_THROWS_AS(ReductionParams::make(Rational(1, 2), 0), PreconditionError);
  }

  TEST_CASE("hypothesis is enforced") {
    CHECK_THROWS_AS(reduce(path_graph(200), third()), PreconditionError);
    CHECK_THROWS_AS(reduce(Graph(0), third()), PreconditionError);
  }

  TEST_CASE("ratio") {
    const Graph g = complete_bipartite(4, 4);
    const double expect = 16.0 / std::pow(8.0, 1.0 + 1.0 / 6.0);
    CHECK(static_cast<double>(ratio(g, Rational(1, 6))) == doctest::Approx(expect).epsilon(1e-12));
  }

  TEST_CASE("postconditions recomputed on dense random graphs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const std::size_t n = 60 + 20 * seed;
      const Graph g = random_graph(n, 0.25, seed);
      const ReductionResult r = reduce(g, third());
      const Graph& h = r.subgraph.graph;
      REQUIRE(h.order() > 0);

      // Induced in the input, with labels that lift correctly.
      for (Vertex a = 0; a < h.order(); ++a) {
        for (Vertex b = a + 1; b < h.order(); ++b) {
          CHECK(h.has_edge(a, b) == g.has_edge(r.subgraph.lift(a), r.subgraph.lift(b)));
        }
      }

      std::size_t dmin = h.order(), dmax = 0;
      for (Vertex v = 0; v < h.order(); ++v) {
        dmin = std::min(dmin, h.degree(v));
        dmax = std::max(dmax, h.degree(v));
      }
      const auto& last = r.transcript.back();
      CHECK(last.branch == 2);
      const Check* avg = r.check("min_degree_average");
      REQUIRE(avg != nullptr);
      CHECK(avg->holds == (2 * last.vertices * dmin >= last.edges));
      CHECK(avg->holds);
      const Check* window = r.check("ratio_window");
      REQUIRE(window != nullptr);
      CHECK(window->holds == (Rational(dmax) * *third().gamma_exact <= Rational(dmin)));
      const Check* md = r.check("min_degree");
      REQUIRE(md != nullptr);
      const double md_rhs = 0.125 * std::pow(static_cast<double>(h.order()), 1.0 / 3.0);
      CHECK(md->rhs == doctest::Approx(md_rhs).epsilon(1e-12));
      CHECK(md->holds == (static_cast<double>(dmin) >= md_rhs));
      CHECK(r.branch_one_steps <= static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n)))));
    }
  }

  TEST_CASE("a dominant hub triggers the shrinking branch") {
    // Hub 0 joined to everything plus a sparse remainder: S = {0} carries
    // more than a quarter of the edges.
    const std::size_t n = 200;
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
    const Graph rest = random_graph(n - 1, 0.008, 3);
    for (auto [u, v] : rest.edges()) e.emplace_back(u + 1, v + 1);
    const Graph g = Graph::from_edges(n, e);
    REQUIRE(4 * (n - 1) >= g.size());
    try {
      const ReductionResult r = reduce(g, third());
      CHECK(r.branch_one_steps >= 1);
      CHECK(r.transcript.front().branch == 1);
    } catch (const ReductionCollapse& c) {
      REQUIRE_FALSE(c.transcript().empty());
      CHECK(c.transcript().front().branch == 1);
      CHECK(c.transcript().front().s_size == 1);
    }
  }

  TEST_CASE("transcript sizes are consistent") {
    const Graph g = random_graph(300, 0.2, 99);
    const ReductionResult r = reduce(g, third());
    CHECK(r.transcript.front().vertices == 300);
    CHECK(r.transcript.front().edges == g.size());
    for (const auto& s : r.transcript) CHECK(s.s_size >= 1);
  }
}
