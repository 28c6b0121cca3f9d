#include "evencycle/serialize.hpp"

#include <cmath>

#include "evencycle/error.hpp"

namespace evencycle {

namespace {

// JSON has no infinities; they print as null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json conditions(const std::vector<ConditionValue>& items) {
  Json out = Json::array();
  for (const auto& c : items) out.push_back(to_json(c));
  return out;
}

Json layer_sets(const std::array<VertexSet, 3>& layers) {
  return Json{{"v1", layers[0]}, {"v2", layers[1]}, {"v3", layers[2]}};
}

Json spec_json(const MinDegSpec& s) {
  return Json{{"A", number(s.A)}, {"B", number(s.B)}, {"C", number(s.C)}, {"D", number(s.D)}};
}

Json path_json(const GoodPath& p) {
  return Json{{"vertices", p.vertices}, {"goodness", to_json(p.goodness)}};
}

}  // namespace

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

Json to_json(const ThetaCertificate& c) {
  return Json{{"cycle", c.cycle}, {"chord", {c.chord.first, c.chord.second}}};
}

Json to_json(const WellPlacedWitness& w) {
  Json out = Json::object();
  for (const auto& [v, x] : w) out[std::to_string(v)] = x;
  return out;
}

Json to_json(const ConditionValue& c) {
  return Json{{"name", c.name}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"holds", c.holds}};
}

Json to_json(const Check& c) {
  return Json{{"name", c.name}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"holds", c.holds}};
}

Json to_json(const std::vector<ReductionStep>& transcript) {
  Json out = Json::array();
  for (const auto& s : transcript) {
    Json j{{"branch", s.branch},         {"vertices", s.vertices},
           {"edges", s.edges},           {"s_size", s.s_size},
           {"t_size", s.t_size},         {"s_incident", s.s_incident},
           {"ratio_before", number(s.ratio_before)}, {"ratio_after", number(s.ratio_after)},
           {"ratio_increased", s.ratio_increased}};
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const ReductionResult& r, bool trace) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j{{"vertices", r.subgraph.to_parent},
         {"order", r.subgraph.graph.order()},
         {"size", r.subgraph.graph.size()},
         {"branch_one_steps", r.branch_one_steps},
         {"checks", std::move(checks)}};
  if (trace) j["transcript"] = to_json(r.transcript);
  return j;
}

Json to_json(const BaseOutcome& o) {
  Json j{{"outcome", kind_name(o.kind)}, {"e12", o.e12}};
  switch (o.kind) {
    case BaseOutcome::Kind::ThetaFound: j["theta"] = to_json(o.theta); break;
    case BaseOutcome::Kind::Subgraph: j["subgraph"] = layer_sets(o.subgraph); break;
    case BaseOutcome::Kind::Shrunk:
      j["v2_tilde"] = o.v2_tilde;
      j["e12_tilde"] = o.e12_tilde;
      break;
  }
  const auto& t = o.transcript;
  j["removed"] = t.removals.size();
  j["R"] = t.R;
  j["S"] = t.S;
  j["E_prime"] = t.Eprime.size();
  return j;
}

Json to_json(const ChainResult& r, bool trace) {
  Json j{{"outcome", kind_name(r.kind)}, {"t", r.t}, {"F", number(r.F)}, {"steps", r.steps.size()}};
  switch (r.kind) {
    case ChainResult::Kind::ThetaFound: j["theta"] = to_json(r.theta); break;
    case ChainResult::Kind::Subgraph:
      j["subgraph"] = layer_sets(r.subgraph);
      j["spec"] = spec_json(r.spec);
      j["subgraph_checks"] = conditions(r.subgraph_checks);
      break;
    case ChainResult::Kind::Failure:
      j["failure"] = r.failure;
      j["failure_detail"] = conditions(r.failure_detail);
      break;
  }
  if (trace) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
      steps.push_back(Json{{"i", s.i},
                           {"v2_size", s.v2_size},
                           {"e_i", s.e_i},
                           {"a", number(s.a)},
                           {"d_i", number(s.d_i)},
                           {"A", number(s.A)},
                           {"B", number(s.B)},
                           {"D", number(s.D)},
                           {"budget_lhs", number(s.budget_lhs)},
                           {"budget_rhs", number(s.budget_rhs)},
                           {"outcome", kind_name(s.outcome)},
                           {"invariants", conditions(s.invariants)}});
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

Json to_json(const EmbedOutcome& o, bool trace) {
  Json j{{"outcome", kind_name(o.kind)}};
  if (o.kind != EmbedOutcome::Kind::BudgetReport) j["theta"] = to_json(o.cert);
  if (o.kind == EmbedOutcome::Kind::WellPlaced) j["witness"] = to_json(o.witness);
  if (o.shortfall) {
    j["shortfall"] = Json{{"what", o.shortfall->what},
                          {"lhs", number(o.shortfall->lhs)},
                          {"rhs", number(o.shortfall->rhs)}};
  }
  j["path"] = path_json(o.longest);
  if (trace) {
    Json rounds = Json::array();
    for (const auto& r : o.trace) {
      rounds.push_back(Json{{"anchor", r.anchor},
                            {"i", r.i},
                            {"frontier", r.u_size},
                            {"s1", r.s1},
                            {"f1", r.f1},
                            {"t", r.t_size},
                            {"s2", r.s2},
                            {"eps", number(r.eps)},
                            {"survivors", r.survivors},
                            {"recurrence_bound", number(r.recurrence_bound)},
                            {"recurrence_holds", r.recurrence_holds},
                            {"notes", r.notes}});
    }
    j["trace"] = std::move(rounds);
  }
  return j;
}

Json to_json(const ExpansionAudit& a) {
  Json levels = Json::array();
  for (const auto& lv : a.levels) {
    levels.push_back(Json{{"i", lv.i},
                          {"size", lv.size_i},
                          {"next_size", lv.size_next},
                          {"forward_edges", lv.forward_edges},
                          {"checks", conditions(lv.checks)}});
  }
  return Json{{"root", a.root}, {"k", a.k}, {"d", number(a.d)}, {"levels", std::move(levels)}};
}

Json to_json(const FindReport& r, bool trace) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  Json j{{"outcome", outcome_name(r.outcome)}, {"method", r.method}, {"k", r.k}};
  if (r.method == "structural") {
    j["d"] = number(r.d);
    j["Delta"] = number(r.Delta);
    j["roots"] = r.roots;
  }
  if (r.cycle) j["cycle"] = *r.cycle;
  j["certificates"] = std::move(certs);
  if (r.failing) j["failing"] = to_json(*r.failing);
  j["steps"] = r.steps;
  if (trace) {
    Json attempts = Json::array();
    for (const auto& at : r.attempts) {
      Json x{{"root", at.root}, {"level", at.level},
             {"conditions", conditions({at.conditions.items.begin(), at.conditions.items.end()})}};
      if (at.chain) x["chain"] = to_json(*at.chain, true);
      if (at.embed) x["embed"] = to_json(*at.embed, true);
      if (!at.note.empty()) x["note"] = at.note;
      attempts.push_back(std::move(x));
    }
    j["attempts"] = std::move(attempts);
  }
  return j;
}

Json to_json(const LayerThetaAudit& a) {
  Json roots = Json::array();
  for (const auto& r : a.roots) {
    Json levels = Json::array();
    Json certs = Json::array();
    for (const auto& lv : r.levels) {
      levels.push_back(Json{{"i", lv.i},
                            {"bipartite_theta", status_name(lv.bipartite)},
                            {"well_placed_theta", status_name(lv.well_placed)}});
      if (lv.counterexample) {
        Json c = to_json(*lv.counterexample);
        c["level"] = lv.i;
        if (lv.witness) c["witness"] = to_json(*lv.witness);
        certs.push_back(std::move(c));
      }
    }
    roots.push_back(Json{{"root", r.root},
                         {"levels", std::move(levels)},
                         {"outcome", r.passed() ? "pass" : "counterexample"},
                         {"certificates", std::move(certs)}});
  }
  return Json{{"k", a.k}, {"outcome", a.passed() ? "pass" : "counterexample"}, {"roots", std::move(roots)}};
}

Json to_json(const BoundReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    Json x{{"name", b.name}, {"log10", number(b.log10_value)}};
    if (b.value) {
      x["value"] = *b.value;
      x["relative_gap"] = number(b.relative_gap);
    }
    bounds.push_back(std::move(x));
  }
  return Json{{"n", r.n}, {"k", r.k}, {"bounds", std::move(bounds)}};
}

Json to_json(const std::vector<Threshold>& t) {
  Json out = Json::array();
  for (const auto& x : t) {
    out.push_back(Json{{"name", x.name},
                       {"log10", number(x.log10_value)},
                       {"log10_exact", number(x.log10_exact)},
                       {"relative_gap", number(x.relative_gap)}});
  }
  return out;
}

Json to_json(const CrossoverReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"k_max", r.k_max},
              {"pikhurko", opt(r.pikhurko)},
              {"pikhurko_50_digits", opt(r.pikhurko_50)},
              {"pikhurko_double", opt(r.pikhurko_double)},
              {"stable", r.stable},
              {"bukh_jiang", opt(r.bukh_jiang)}};
}

ThetaCertificate theta_from_json(const Json& j) {
  try {
    ThetaCertificate c;
    c.cycle = j.at("cycle").get<std::vector<Vertex>>();
    const auto chord = j.at("chord").get<std::vector<Vertex>>();
    if (chord.size() != 2) throw PreconditionError("chord must have two endpoints");
    c.chord = {chord[0], chord[1]};
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed theta certificate: ") + e.what());
  }
}

WellPlacedWitness witness_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("witness must be an object");
  WellPlacedWitness w;
  try {
    for (const auto& [key, value] : j.items()) {
      std::size_t used = 0;
      const unsigned long v = std::stoul(key, &used);
      if (used != key.size()) throw PreconditionError("bad witness key '" + key + "'");
      w[static_cast<Vertex>(v)] = value.get<Vertex>();
    }
  } catch (const PreconditionError&) {
    throw;
  } catch (const std::exception& e) {
    throw PreconditionError(std::string("malformed witness: ") + e.what());
  }
  return w;
}

}  // namespace evencycle
