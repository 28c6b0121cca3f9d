#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/theta.hpp"

namespace evencycle {

/// Degree floors V1->V2, V2->V1, V2->V3, V3->V2. Floors may be negative, in
/// which case they are vacuous.
struct MinDegSpec {
  double A = 0, B = 0, C = 0, D = 0;
};

enum class DegreeSide { A, B, C, D };

const char* side_name(DegreeSide s);

/// True when every layer is nonempty and every vertex meets its floors.
bool satisfies(const TrilayeredView& t, const MinDegSpec& spec);

struct Removal {
  Vertex vertex = 0;
  int layer = 0;
  DegreeSide side = DegreeSide::A;
  std::size_t degree = 0;  // degree toward the violated side at removal
};

struct PeelTranscript {
  std::vector<Removal> removals;
  VertexSet R;                // V2 vertices removed for too few V3 neighbours
  VertexSet S;                // V2 vertices with >= 4k^2 neighbours in V1
  std::vector<Edge> Eprime;   // (u in V2, v in V3), v removed before u
  VertexSet V2tilde;          // R \ S
};

struct PeelOutcome {
  std::optional<std::array<VertexSet, 3>> survivors;
  PeelTranscript transcript;
};

/// Removes the smallest-id violator, checking sides in the order A, B, C, D,
/// until none is left. survivors is set only when all three layers survive.
PeelOutcome peel_to_min_deg(const TrilayeredView& t, const MinDegSpec& spec, int k);

struct BaseOutcome {
  enum class Kind { ThetaFound, Subgraph, Shrunk };
  Kind kind = Kind::Shrunk;
  ThetaCertificate theta;               // ThetaFound, in G[V1, V2]
  std::array<VertexSet, 3> subgraph;    // Subgraph
  VertexSet v2_tilde;                   // Shrunk
  std::size_t e12 = 0;                  // e(V1, V2) of the input
  std::size_t e12_tilde = 0;            // e(V1, V2tilde)
  PeelTranscript transcript;
};

const char* kind_name(BaseOutcome::Kind k);

/// One application of the peel with its three-way outcome. Throws
/// PreconditionError when a*e(V1,V2) < (A+k+1)|V1| + B|V2| or when a V2
/// vertex has fewer than d + 4k^2 + C neighbours in V3.
BaseOutcome base_step(const TrilayeredView& t, double a, const MinDegSpec& spec, double d, int k);

struct ConditionValue {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

struct ConditionReport {
  std::array<ConditionValue, 3> items;
  bool all() const { return items[0].holds && items[1].holds && items[2].holds; }
};

/// density_vs_v3: d e(V1,V2) >= 40 k ln k |V3|
/// density_vs_v1: e(V1,V2) >= 6k (ln k + 1)^2 (2 Delta k)^(2k-1) |V1|
/// density_vs_v2: e(V1,V2) >= 20 (ln k + 1) |V2|
/// Sides are evaluated with 50 significant digits.
ConditionReport check_conditions(const TrilayeredView& t, double d, int k, double Delta);

struct ChainStep {
  int i = 0;
  std::size_t v2_size = 0;
  std::size_t e_i = 0;  // e(V1, V2^(i))
  double a = 0, d_i = 0, A = 0, B = 0, D = 0;
  double budget_lhs = 0, budget_rhs = 0;
  BaseOutcome::Kind outcome = BaseOutcome::Kind::Shrunk;
  std::vector<ConditionValue> invariants;  // recorded after the step resolves
};

struct ChainResult {
  enum class Kind { ThetaFound, Subgraph, Failure };
  Kind kind = Kind::Failure;
  int t = 0;
  double F = 0;
  std::vector<ChainStep> steps;
  ThetaCertificate theta;
  std::array<VertexSet, 3> subgraph;
  MinDegSpec spec;                       // floors of the Subgraph outcome
  std::vector<ConditionValue> subgraph_checks;  // anchor_floor, cycle_length_floor, b_at_least_5
  std::string failure;                   // first violated item, for Failure
  std::vector<ConditionValue> failure_detail;
};

const char* kind_name(ChainResult::Kind k);

/// Runs base_step along the chain V2 = V2^(0) >= V2^(1) >= ... for up to t
/// steps (t = ceil(ln k) unless overridden).
ChainResult iterate_chain(const TrilayeredView& t, double d, int k, double Delta, double C,
                          std::optional<int> steps = std::nullopt);

int default_chain_length(int k);

}  // namespace evencycle
