#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "evencycle/graph.hpp"

namespace evencycle {

/// A cycle of length at least 2k together with a chord.
struct ThetaCertificate {
  std::vector<Vertex> cycle;
  Edge chord{0, 0};

  friend bool operator==(const ThetaCertificate&, const ThetaCertificate&) = default;
};

/// Maps every certificate vertex lying in V2 to a V1 neighbour outside the certificate.
using WellPlacedWitness = std::map<Vertex, Vertex>;

bool verify_theta(const Graph& g, const ThetaCertificate& cert, int k);

/// Theta check using only edges the view retains, all vertices inside it.
bool verify_theta_in_view(const TrilayeredView& t, const ThetaCertificate& cert, int k);

/// Checks the certificate against the retained edges of the view, and that the
/// witness covers exactly the V2 vertices of the certificate with V1 vertices
/// outside it.
bool verify_well_placed(const TrilayeredView& t, const ThetaCertificate& cert,
                        const WellPlacedWitness& w, int k);

/// Smallest-id V1 neighbour outside the certificate for each V2 certificate
/// vertex, or nullopt when some V2 vertex has none.
std::optional<WellPlacedWitness> well_placed_witness(const TrilayeredView& t,
                                                     const ThetaCertificate& cert);

struct PeelResult {
  InducedSubgraph core;
  std::vector<Vertex> removal_order;
};

/// Maximal induced subgraph with minimum degree >= delta. Deletes the
/// smallest-id violator each step; with a seed, deletes a uniformly chosen
/// violator instead. The surviving vertex set does not depend on the order.
PeelResult peel_min_degree(const Graph& g, std::size_t delta,
                           std::optional<std::uint64_t> seed = std::nullopt);

/// Maximal-path construction in a bipartite view of minimum degree >= k >= 3.
ThetaCertificate find_theta_min_degree(const BipartiteView& b, int k);

/// Runs the maximal-path construction on the k-core of the view, if the
/// k-core is nonempty. Labels are those of the view's base graph.
std::optional<ThetaCertificate> find_theta_k_core(const BipartiteView& b, int k);

/// Peels to minimum degree k and delegates to find_theta_min_degree. Requires
/// average degree 2e/(|left|+|right|) >= 2k.
ThetaCertificate find_theta_avg_degree(const BipartiteView& b, int k);

}  // namespace evencycle
