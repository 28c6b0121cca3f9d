#pragma once

#include <json.hpp>

#include "evencycle/bounds.hpp"
#include "evencycle/explorer.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/path_embed.hpp"
#include "evencycle/reduction.hpp"
#include "evencycle/trilayer_search.hpp"

namespace evencycle {

using Json = nlohmann::ordered_json;

Json to_json(const ThetaCertificate& c);
Json to_json(const WellPlacedWitness& w);
Json to_json(const ConditionValue& c);
Json to_json(const Check& c);
Json to_json(const ReductionResult& r, bool trace);
Json to_json(const std::vector<ReductionStep>& transcript);
Json to_json(const BaseOutcome& o);
Json to_json(const ChainResult& r, bool trace);
Json to_json(const EmbedOutcome& o, bool trace);
Json to_json(const ExpansionAudit& a);
Json to_json(const FindReport& r, bool trace);
Json to_json(const LayerThetaAudit& a);
Json to_json(const BoundReport& r);
Json to_json(const std::vector<Threshold>& t);
Json to_json(const CrossoverReport& r);

const char* status_name(SearchStatus s);

/// Reads {"cycle":[...], "chord":[u,v]}; throws PreconditionError on a bad shape.
ThetaCertificate theta_from_json(const Json& j);
/// Reads {"v2 vertex": v1 vertex, ...} with string keys.
WellPlacedWitness witness_from_json(const Json& j);

}  // namespace evencycle
