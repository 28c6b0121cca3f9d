#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/theta.hpp"

namespace evencycle {

/// Caps for the exponential searches. A search that would exceed either cap
/// stops and reports SearchStatus::BudgetExceeded.
struct SearchBudget {
  std::size_t max_vertices = 64;
  std::uint64_t max_steps = 50'000'000;
};

enum class SearchStatus { Found, None, BudgetExceeded };

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::None;
  std::optional<T> value;
  std::uint64_t steps = 0;

  bool found() const { return status == SearchStatus::Found; }
  bool none() const { return status == SearchStatus::None; }
  bool exceeded() const { return status == SearchStatus::BudgetExceeded; }
};

using Cycle = std::vector<Vertex>;

struct WellPlacedTheta {
  ThetaCertificate theta;
  WellPlacedWitness witness;
};

/// Lexicographically smallest simple cycle of length exactly 2k.
SearchResult<Cycle> find_c2k_exact(const Graph& g, int k, const SearchBudget& budget = {});

/// Canonical certificate: shortest cycle length >= 2k first, then the
/// lexicographically smallest cycle sequence, then the smallest chord.
SearchResult<ThetaCertificate> find_theta_exact(const Graph& g, int k,
                                                const SearchBudget& budget = {});

SearchResult<WellPlacedTheta> find_well_placed_theta_exact(const TrilayeredView& t, int k,
                                                           const SearchBudget& budget = {});

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Calls visit on every simple cycle of the given length, each exactly once, in
/// lexicographic order of its canonical sequence (smallest vertex first,
/// second vertex smaller than the last). visit returns true to stop. Only
/// vertices with allowed[v] set take part. Returns false when the step budget
/// ran out.
bool enumerate_cycles(const Graph& g, std::size_t length, const std::vector<bool>& allowed,
                      const std::function<bool(const Cycle&)>& visit, std::uint64_t max_steps,
                      std::uint64_t& steps);

}  // namespace evencycle
