#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/path_embed.hpp"
#include "evencycle/trilayer_search.hpp"

namespace evencycle {

/// G(n, p): each pair independently with probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Left part 0..a-1, right part a..a+b-1, each cross pair with probability p.
Graph random_bipartite(std::size_t a, std::size_t b, double p, std::uint64_t seed);

Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen();

/// Random r-regular graph by the pairing model, retried until simple.
Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed);

/// A trilayered instance together with the parameters it was built for.
struct LayeredFixture {
  std::string kind;
  Graph graph;
  std::array<VertexSet, 3> layers;
  int k = 3;
  double d = 1;
  double Delta = 1;
  double C = 0;
  double a = 0;                   // base-step fixtures
  MinDegSpec spec;                // base-step fixtures
  std::optional<int> steps;       // chain fixtures
  EmbedParams embed;              // embedding fixtures

  TrilayeredView view() const { return TrilayeredView(graph, layers[0], layers[1], layers[2]); }
};

/// base-shrunk, base-theta, base-subgraph, chain-dense, chain-shrunk,
/// embed-d1, embed-d2.
const std::vector<std::string>& fixture_kinds();

/// The seed relabels vertices; embed-d1 also draws its sizes and V3 edges from it.
LayeredFixture trilayer_fixture(std::string_view kind, std::uint64_t seed);

/// Edge list preceded by "#L1 ...", "#L2 ...", "#L3 ..." layer lines and a
/// "#P {json}" line with the parameters.
void write_fixture(std::ostream& out, const LayeredFixture& f);

/// Layers and parameter JSON text from the comment lines of a fixture file.
struct FixtureHeader {
  std::optional<std::array<VertexSet, 3>> layers;
  std::optional<std::string> params;
};
FixtureHeader parse_fixture_header(std::string_view text);

}  // namespace evencycle
