#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/theta.hpp"

namespace evencycle {

/// A path v0 ~ v1 ~ ... ~ vl through the view whose anchors lie in V1 and
/// whose segments alternate V2/V3. goodness maps each V2 path vertex to a V1
/// neighbour off the path.
struct GoodPath {
  std::vector<Vertex> vertices;
  std::map<Vertex, Vertex> goodness;

  std::vector<std::size_t> anchor_positions(const TrilayeredView& t) const;
};

bool check_good(const TrilayeredView& t, const GoodPath& p);

struct EmbedParams {
  double A = 0;
  double B = 0;
  int D = 1;          // segment parameter, an integer >= 1
  double Delta = 1;
  double d = 1;
  int k = 3;
};

/// A paths-in-progress frontier: for each u, Q(u) runs from a U0 vertex to u.
struct ExtensionState {
  int i = 0;
  std::map<Vertex, std::vector<Vertex>> Q;  // keyed by frontier vertex u
  VertexSet S1, F1, S2, F2, Dset;
  std::map<Vertex, VertexSet> T_u;
  VertexSet T;
  double eps = 0;
  std::vector<std::string> notes;
};

struct Shortfall {
  std::string what;
  double lhs = 0;
  double rhs = 0;
};

struct RoundTrace {
  std::size_t anchor = 0;   // index of the anchor being extended from
  int i = 0;
  std::size_t u_size = 0, s1 = 0, f1 = 0, t_size = 0, s2 = 0, survivors = 0;
  double eps = 0;
  double recurrence_bound = 0;  // eps/(2(i+1)) |U_i| - 2k
  bool recurrence_holds = true;
  std::vector<std::string> notes;
};

struct EmbedOutcome {
  enum class Kind { ThetaInV2V3, WellPlaced, BudgetReport };
  Kind kind = Kind::BudgetReport;
  ThetaCertificate cert;
  WellPlacedWitness witness;
  GoodPath longest;
  std::optional<Shortfall> shortfall;
  std::vector<RoundTrace> trace;
};

const char* kind_name(EmbedOutcome::Kind k);

/// Throws PreconditionError unless the view meets [A:B, d+k:D], B >= 5,
/// A >= 2k(Delta D)^(D-1), (B-4)D >= 2k, and every V2 vertex has at most
/// Delta*d neighbours in V3.
void check_embed_preconditions(const TrilayeredView& t, const EmbedParams& p);

/// Tries cycles made of x together with a stretch of seq, chorded through x.
/// x may sit on seq. Well-placed certificates are preferred; a certificate
/// inside V2 u V3 is returned otherwise.
std::optional<EmbedOutcome> extract_theta(const TrilayeredView& t, const std::vector<Vertex>& seq,
                                          Vertex x, int k);

struct ProcedureOneResult {
  std::optional<ThetaCertificate> theta;  // set when |S1| < |U_i|/2 led to a theta
};

/// Splits the frontier into S1 (got ceil(d/(2k+1)) fresh V3 neighbours) and
/// F1. Requires every frontier vertex to keep >= d V3 neighbours off its path.
ProcedureOneResult procedure_one(const TrilayeredView& t, const std::vector<Vertex>& P,
                                 ExtensionState& state, double d, int k);

/// Two-step extensions u -> v in T_u -> w in V2, keeping endpoints distinct,
/// and replaces the frontier with the new endpoints. Throws PreconditionError
/// naming a V2 vertex above Delta*d if the success count falls under
/// eps|S1| - 2k while such a vertex exists.
void procedure_two(const TrilayeredView& t, const std::vector<Vertex>& P, ExtensionState& state,
                   double Delta, double d, int k, int i, int D);

/// One more anchor, or the outcome that stopped the extension. Round records
/// are appended to trace when given.
std::variant<GoodPath, EmbedOutcome> extend_once(const TrilayeredView& t, const GoodPath& p,
                                                 const EmbedParams& params,
                                                 std::vector<RoundTrace>* trace = nullptr);

EmbedOutcome embed_or_theta(const TrilayeredView& t, const EmbedParams& params);

}  // namespace evencycle
