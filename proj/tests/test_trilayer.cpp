#include <doctest.h>

#include <cmath>
#include <set>

#include "evencycle/error.hpp"
#include "evencycle/generators.hpp"
#include "evencycle/trilayer_search.hpp"
#include "oracles.hpp"

using namespace evencycle;

namespace {

// Simultaneous-removal peel, the obvious way.
std::array<std::set<Vertex>, 3> naive_peel(const TrilayeredView& t, const MinDegSpec& s) {
  std::array<std::set<Vertex>, 3> L{std::set<Vertex>(t.v1().begin(), t.v1().end()),
                                    std::set<Vertex>(t.v2().begin(), t.v2().end()),
                                    std::set<Vertex>(t.v3().begin(), t.v3().end())};
  auto deg = [&](Vertex v, int layer) {
    double c = 0;
    for (Vertex w : t.base().neighbors(v)) c += L[static_cast<std::size_t>(layer - 1)].count(w) && t.retains(v, w);
    return c;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::array<std::vector<Vertex>, 3> drop;
    for (Vertex v : L[0]) if (deg(v, 2) < s.A) drop[0].push_back(v);
    for (Vertex v : L[1]) if (deg(v, 1) < s.B || deg(v, 3) < s.C) drop[1].push_back(v);
    for (Vertex v : L[2]) if (deg(v, 2) < s.D) drop[2].push_back(v);
    for (int i = 0; i < 3; ++i) {
      for (Vertex v : drop[static_cast<std::size_t>(i)]) {
        L[static_cast<std::size_t>(i)].erase(v);
        changed = true;
      }
    }
  }
  return L;
}

TrilayeredView random_view(const Graph& g) {
  VertexSet a, b, c;
  for (Vertex v = 0; v < g.order(); ++v) (v % 3 == 0 ? a : v % 3 == 1 ? b : c).push_back(v);
  return TrilayeredView(g, a, b, c);
}

}  // namespace

TEST_SUITE("trilayer") {
  TEST_CASE("peel reaches the unique maximal subgraph") {
    int nonempty = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Graph g = random_graph(60, 0.15, seed);
      const TrilayeredView t = random_view(g);
      const MinDegSpec spec{2, 2, 1.5, 2};
      const auto naive = naive_peel(t, spec);
      const PeelOutcome out = peel_to_min_deg(t, spec, 3);
      const bool all = !naive[0].empty() && !naive[1].empty() && !naive[2].empty();
      CHECK(out.survivors.has_value() == all);
      if (!out.survivors) continue;
      ++nonempty;
      for (int i = 0; i < 3; ++i) {
        const auto& got = (*out.survivors)[static_cast<std::size_t>(i)];
        CHECK(std::set<Vertex>(got.begin(), got.end()) == naive[static_cast<std::size_t>(i)]);
      }
      const auto& s = *out.survivors;
      CHECK(satisfies(t.restrict(s[0], s[1], s[2]), spec));
    }
    CHECK(nonempty > 5);
  }

  TEST_CASE("satisfies needs nonempty layers") {
    const Graph g = complete_bipartite(3, 3);
    const TrilayeredView t(g, {0, 1, 2}, {3, 4, 5}, {});
    CHECK_FALSE(satisfies(t, {0, 0, 0, 0}));
  }

  TEST_CASE("negative floors are vacuous") {
    const Graph g = path_graph(3);
    const TrilayeredView t(g, {0}, {1}, {2});
    CHECK(satisfies(t, {-4, -1, 1, 1}));
    CHECK_FALSE(satisfies(t, {2, 1, 1, 1}));
  }

  TEST_CASE("base step reaches each outcome on its fixture") {
    const std::pair<const char*, BaseOutcome::Kind> cases[] = {
        {"base-shrunk", BaseOutcome::Kind::Shrunk},
        {"base-theta", BaseOutcome::Kind::ThetaFound},
        {"base-subgraph", BaseOutcome::Kind::Subgraph}};
    for (const auto& [kind, expect] : cases) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const LayeredFixture f = trilayer_fixture(kind, seed);
        const BaseOutcome o = base_step(f.view(), f.a, f.spec, f.d, f.k);
        CHECK(o.kind == expect);
      }
    }
  }

  TEST_CASE("base step transcript sets") {
    const LayeredFixture f = trilayer_fixture("base-shrunk", 1);
    const BaseOutcome o = base_step(f.view(), f.a, f.spec, f.d, f.k);
    const auto& tr = o.transcript;
    std::set<Vertex> S(tr.S.begin(), tr.S.end());
    VertexSet expect;
    for (Vertex v : tr.R) if (!S.count(v)) expect.push_back(v);
    CHECK(tr.V2tilde == expect);
    CHECK(o.v2_tilde == tr.V2tilde);
    for (auto [u, v] : tr.Eprime) {
      CHECK(f.view().layer_of(u) == 2);
      CHECK(f.view().layer_of(v) == 3);
    }
  }

  TEST_CASE("base step preconditions") {
    LayeredFixture f = trilayer_fixture("base-shrunk", 1);
    CHECK_THROWS_AS(base_step(f.view(), 0.01, f.spec, f.d, f.k), PreconditionError);
    CHECK_THROWS_AS(base_step(f.view(), f.a, f.spec, 1000.0, f.k), PreconditionError);
  }

  TEST_CASE("conditions match their closed forms") {
    const LayeredFixture f = trilayer_fixture("chain-dense", 1);
    const TrilayeredView t = f.view();
    const ConditionReport r = check_conditions(t, f.d, f.k, f.Delta);
    const double e = static_cast<double>(t.edge_count(1, 2));
    const double k = f.k, lk = std::log(k);
    CHECK(r.items[0].lhs == doctest::Approx(f.d * e).epsilon(1e-12));
    CHECK(r.items[0].rhs == doctest::Approx(40 * k * lk * static_cast<double>(t.v3().size())).epsilon(1e-12));
    CHECK(r.items[1].rhs == doctest::Approx(6 * k * (lk + 1) * (lk + 1) * std::pow(2 * f.Delta * k, 2 * k - 1) *
                                            static_cast<double>(t.v1().size())).epsilon(1e-12));
    CHECK(r.items[2].rhs == doctest::Approx(20 * (lk + 1) * static_cast<double>(t.v2().size())).epsilon(1e-12));
    CHECK(r.all());
  }

  TEST_CASE("chain on the dense fixture ends in a subgraph meeting the constraints") {
    const LayeredFixture f = trilayer_fixture("chain-dense", 2);
    const ChainResult r = iterate_chain(f.view(), f.d, f.k, f.Delta, f.C, f.steps);
    REQUIRE(r.kind == ChainResult::Kind::Subgraph);
    for (const auto& c : r.subgraph_checks) CHECK_MESSAGE(c.holds, c.name);
    const auto& s = r.subgraph;
    CHECK(satisfies(f.view().restrict(s[0], s[1], s[2]), r.spec));
  }

  TEST_CASE("chain on the shrinking fixture records holding invariants") {
    const LayeredFixture f = trilayer_fixture("chain-shrunk", 1);
    const ChainResult r = iterate_chain(f.view(), f.d, f.k, f.Delta, f.C, f.steps);
    REQUIRE_FALSE(r.steps.empty());
    CHECK(r.steps.front().outcome == BaseOutcome::Kind::Shrunk);
    CHECK(r.steps.front().invariants.size() == 6);
    for (const auto& c : r.steps.front().invariants) CHECK_MESSAGE(c.holds, c.name);
  }

  TEST_CASE("chain preconditions") {
    const LayeredFixture f = trilayer_fixture("chain-dense", 1);
    CHECK_THROWS_AS(iterate_chain(f.view(), f.d, 2, f.Delta, f.C), PreconditionError);
    CHECK_THROWS_AS(iterate_chain(f.view(), f.d, f.k, 1e6, f.C), PreconditionError);
    CHECK_THROWS_AS(iterate_chain(f.view(), f.d, f.k, f.Delta, f.C, 0), PreconditionError);
    CHECK(default_chain_length(3) == 2);
    CHECK(default_chain_length(20) == 3);
  }
}
