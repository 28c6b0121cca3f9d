#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evencycle/error.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/path_embed.hpp"
#include "evencycle/trilayer_search.hpp"

namespace evencycle {

struct LevelExpansion {
  int i = 0;
  std::size_t size_i = 0;      // |V_i|
  std::size_t size_next = 0;   // |V_{i+1}|
  std::size_t forward_edges = 0;  // e(V_i, V_{i+1})
  // forward_edges_vs_degree:  e(V_i,V_{i+1}) >= 2d|V_i|
  // forward_edges_vs_next:    e(V_i,V_{i+1}) <= 2k|V_{i+1}|
  // growth_one_level:         |V_{i+1}| >= d|V_i|/k
  // growth_two_levels:        |V_{i+1}| >= d^2/(20 k ln k) |V_{i-1}|, i >= 1 only
  std::vector<ConditionValue> checks;
};

struct ExpansionAudit {
  Vertex root = 0;
  int k = 0;
  double d = 0;
  std::vector<LevelExpansion> levels;
};

/// Evaluates the four expansion inequalities at every level 0 <= i <= k-1.
/// For the upper bound, lhs/rhs keep their natural orientation and holds
/// means lhs <= rhs.
ExpansionAudit expansion_audit(const Graph& g, Vertex root, int k, double d);

/// 2 sqrt(5) sqrt(k ln k) n^(1/k), or 2 sqrt(10) sqrt(k ln k) n^(1/k) with the wide coefficient.
double default_d(std::size_t n, int k, bool wide_coefficient);

/// sqrt(k) (20k)^(2k).
double default_delta(int k);

struct FindOptions {
  int k = 3;
  std::optional<double> d;
  std::optional<double> Delta;
  bool wide_coefficient = false;
  SearchBudget budget;
  std::optional<int> chain_steps;
};

struct FindAttempt {
  Vertex root = 0;
  int level = 0;
  ConditionReport conditions;
  std::optional<ChainResult> chain;
  std::optional<EmbedOutcome> embed;
  std::string note;
};

struct FindReport {
  enum class Outcome { Cycle, None, CertificateChain, Shortfall, DegreeWindow, Budget };
  Outcome outcome = Outcome::Budget;
  std::string method;  // "exact" or "structural"
  int k = 0;
  double d = 0;
  double Delta = 0;
  std::optional<Cycle> cycle;
  std::vector<ThetaCertificate> certificates;
  std::optional<ConditionValue> failing;  // first failing inequality
  std::vector<Vertex> roots;
  std::vector<FindAttempt> attempts;
  std::uint64_t steps = 0;
};

const char* outcome_name(FindReport::Outcome o);

FindReport find_c2k(const Graph& g, const FindOptions& opt);

/// Thrown by layer_theta_audit when the graph contains a C_2k.
class NotCycleFree : public PreconditionError {
 public:
  NotCycleFree(const std::string& what, Cycle cycle)
      : PreconditionError(what), cycle_(std::move(cycle)) {}
  const Cycle& cycle() const noexcept { return cycle_; }

 private:
  Cycle cycle_;
};

struct LevelThetaAudit {
  int i = 0;
  SearchStatus bipartite = SearchStatus::None;   // theta in G[V_i, V_{i+1}]
  SearchStatus well_placed = SearchStatus::None; // well-placed theta in the trilayer
  std::optional<ThetaCertificate> counterexample;
  std::optional<WellPlacedWitness> witness;
};

struct RootThetaAudit {
  Vertex root = 0;
  std::vector<LevelThetaAudit> levels;
  bool passed() const;
};

struct LayerThetaAudit {
  int k = 0;
  std::vector<RootThetaAudit> roots;
  bool passed() const;
};

/// Requires g to be C_2k-free, proved by the oracle; throws NotCycleFree
/// carrying the found cycle otherwise, BudgetExhausted when the proof or a
/// level search runs out of budget. Audits every root, or only the given
/// one, at levels 1 <= i <= k-1. Roots run concurrently.
LayerThetaAudit layer_theta_audit(const Graph& g, int k, const SearchBudget& budget = {},
                                  std::optional<Vertex> only_root = std::nullopt);

}  // namespace evencycle
