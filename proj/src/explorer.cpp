#include "evencycle/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

namespace evencycle {

namespace {

ConditionValue at_least(std::string name, double lhs, double rhs) {
  return {std::move(name), lhs, rhs, lhs >= rhs};
}

bool is_cycle_of_length(const Graph& g, const Cycle& c, std::size_t len) {
  if (c.size() != len || len < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : c) {
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!g.has_edge(c[i], c[(i + 1) % len])) return false;
  }
  return true;
}

std::vector<Vertex> deterministic_roots(const Graph& g) {
  const std::size_t n = g.order();
  const DegreeStats ds = degree_stats(g);
  std::size_t want = 1;
  while ((std::size_t{1} << want) < n) ++want;  // ceil(log2 n)
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < n && roots.size() < want; ++v) {
    if (g.degree(v) == ds.min_degree) roots.push_back(v);
  }
  return roots;
}

std::optional<ConditionValue> first_failing(const std::vector<ConditionValue>& items) {
  for (const auto& c : items) {
    if (!c.holds) return c;
  }
  return std::nullopt;
}

}  // namespace

ExpansionAudit expansion_audit(const Graph& g, Vertex root, int k, double d) {
  if (k < 2) throw PreconditionError("expansion audit needs k >= 2");
  const LayerDecomposition L = bfs_layers(g, root, k);
  ExpansionAudit out;
  out.root = root;
  out.k = k;
  out.d = d;
  const double kk = k, lnk = std::log(kk);
  for (int i = 0; i < k; ++i) {
    const auto& Vi = L.layers[static_cast<std::size_t>(i)];
    const auto& Vn = L.layers[static_cast<std::size_t>(i) + 1];
    LevelExpansion lv;
    lv.i = i;
    lv.size_i = Vi.size();
    lv.size_next = Vn.size();
    for (Vertex v : Vi) {
      for (Vertex w : g.neighbors(v)) lv.forward_edges += L.depth[w] == i + 1;
    }
    const double e = static_cast<double>(lv.forward_edges);
    const double si = static_cast<double>(lv.size_i), sn = static_cast<double>(lv.size_next);
    lv.checks.push_back(at_least("forward_edges_vs_degree", e, 2 * d * si));
    lv.checks.push_back({"forward_edges_vs_next", e, 2 * kk * sn, e <= 2 * kk * sn});
    lv.checks.push_back(at_least("growth_one_level", sn, d * si / kk));
    if (i >= 1) {
      const double prev = static_cast<double>(L.layers[static_cast<std::size_t>(i) - 1].size());
      lv.checks.push_back(at_least("growth_two_levels", sn, d * d / (20 * kk * lnk) * prev));
    }
    out.levels.push_back(std::move(lv));
  }
  return out;
}

double default_d(std::size_t n, int k, bool wide_coefficient) {
  const double kk = k;
  return 2 * std::sqrt(wide_coefficient ? 10.0 : 5.0) * std::sqrt(kk * std::log(kk)) *
         std::pow(static_cast<double>(n), 1 / kk);
}

double default_delta(int k) {
  const double kk = k;
  return std::sqrt(kk) * std::pow(20 * kk, 2 * kk);
}

const char* outcome_name(FindReport::Outcome o) {
  switch (o) {
    case FindReport::Outcome::Cycle: return "cycle";
    case FindReport::Outcome::None: return "none";
    case FindReport::Outcome::CertificateChain: return "certificate_chain";
    case FindReport::Outcome::Shortfall: return "shortfall";
    case FindReport::Outcome::DegreeWindow: return "degree_window";
    case FindReport::Outcome::Budget: return "budget";
  }
  return "?";
}

FindReport find_c2k(const Graph& g, const FindOptions& opt) {
  const int k = opt.k;
  if (k < 2) throw PreconditionError("find needs k >= 2");
  const std::size_t n = g.order();
  FindReport rep;
  rep.k = k;
  const auto len = static_cast<std::size_t>(2 * k);

  auto take_exact = [&](const SearchResult<Cycle>& r) {
    rep.steps += r.steps;
    if (!r.found()) return false;
    if (!is_cycle_of_length(g, *r.value, len)) {
      throw InvariantViolation("oracle returned a sequence that is not a cycle");
    }
    rep.cycle = r.value;
    rep.outcome = FindReport::Outcome::Cycle;
    return true;
  };

  if (n <= opt.budget.max_vertices) {
    rep.method = "exact";
    const auto r = find_c2k_exact(g, k, opt.budget);
    if (take_exact(r)) return rep;
    rep.outcome = r.none() ? FindReport::Outcome::None : FindReport::Outcome::Budget;
    return rep;
  }

  rep.method = "structural";
  if (k < 3) throw PreconditionError("the structural search needs k >= 3");
  const double d = opt.d.value_or(default_d(n, k, opt.wide_coefficient));
  const double Delta = opt.Delta.value_or(default_delta(k));
  rep.d = d;
  rep.Delta = Delta;

  const double low = 2 * d + 5.0 * k * k, high = Delta * d;
  for (Vertex v = 0; v < n; ++v) {
    const double deg = static_cast<double>(g.degree(v));
    if (deg < low) {
      rep.failing = ConditionValue{"min_degree_window at vertex " + std::to_string(v), deg, low, false};
    } else if (deg > high) {
      rep.failing = ConditionValue{"max_degree_window at vertex " + std::to_string(v), deg, high, false};
    } else {
      continue;
    }
    rep.outcome = FindReport::Outcome::DegreeWindow;
    return rep;
  }

  rep.roots = deterministic_roots(g);
  for (Vertex root : rep.roots) {
    const LayerDecomposition L = bfs_layers(g, root, k);
    for (int i = 1; i + 1 <= k; ++i) {
      const TrilayeredView t = trilayer(g, L, i);
      FindAttempt at;
      at.root = root;
      at.level = i;
      if (t.v1().empty() || t.v2().empty() || t.v3().empty()) {
        at.note = "empty layer";
        rep.attempts.push_back(std::move(at));
        continue;
      }
      at.conditions = check_conditions(t, d, k, Delta);
      if (!at.conditions.all()) {
        at.note = "conditions fail";
        if (!rep.failing) {
          rep.failing = first_failing({at.conditions.items.begin(), at.conditions.items.end()});
        }
        rep.attempts.push_back(std::move(at));
        continue;
      }
      try {
        at.chain = iterate_chain(t, d, k, Delta, d + k, opt.chain_steps);
      } catch (const PreconditionError& e) {
        at.note = e.what();
        rep.attempts.push_back(std::move(at));
        continue;
      }
      const ChainResult& ch = *at.chain;
      if (ch.kind == ChainResult::Kind::ThetaFound) {
        rep.certificates.push_back(ch.theta);
      } else if (ch.kind == ChainResult::Kind::Failure) {
        if (!rep.failing) rep.failing = first_failing(ch.failure_detail);
      } else {
        const TrilayeredView sub = t.restrict(ch.subgraph[0], ch.subgraph[1], ch.subgraph[2]);
        EmbedParams p;
        p.A = ch.spec.A;
        p.B = ch.spec.B;
        p.D = static_cast<int>(std::ceil(ch.spec.D - 1e-12));
        p.Delta = Delta;
        p.d = d;
        p.k = k;
        try {
          at.embed = embed_or_theta(sub, p);
          if (at.embed->kind == EmbedOutcome::Kind::BudgetReport) {
            if (!rep.failing && at.embed->shortfall) {
              const auto& s = *at.embed->shortfall;
              rep.failing = ConditionValue{s.what, s.lhs, s.rhs, false};
            }
          } else {
            rep.certificates.push_back(at.embed->cert);
          }
        } catch (const PreconditionError& e) {
          at.note = std::string("embedding: ") + e.what();
        }
      }
      rep.attempts.push_back(std::move(at));
    }
  }

  if (!rep.certificates.empty()) {
    // A certificate proves existence; report a cycle only if the oracle finds one.
    const SearchBudget confirm{std::max(n, opt.budget.max_vertices), opt.budget.max_steps};
    if (take_exact(find_c2k_exact(g, k, confirm))) return rep;
    rep.outcome = FindReport::Outcome::CertificateChain;
  } else {
    rep.outcome = rep.failing ? FindReport::Outcome::Shortfall : FindReport::Outcome::Budget;
  }
  return rep;
}

bool RootThetaAudit::passed() const {
  return std::all_of(levels.begin(), levels.end(), [](const LevelThetaAudit& l) {
    return l.bipartite == SearchStatus::None && l.well_placed == SearchStatus::None;
  });
}

bool LayerThetaAudit::passed() const {
  return std::all_of(roots.begin(), roots.end(), [](const RootThetaAudit& r) { return r.passed(); });
}

LayerThetaAudit layer_theta_audit(const Graph& g, int k, const SearchBudget& budget,
                                  std::optional<Vertex> only_root) {
  if (k < 2) throw PreconditionError("layer audit needs k >= 2");
  const auto proof = find_c2k_exact(g, k, budget);
  if (proof.exceeded()) throw BudgetExhausted("could not prove the graph C_2k-free within budget");
  if (proof.found()) {
    std::ostringstream os;
    os << "graph contains a " << 2 * k << "-cycle:";
    for (Vertex v : *proof.value) os << ' ' << v;
    throw NotCycleFree(os.str(), *proof.value);
  }

  std::vector<Vertex> roots;
  if (only_root) {
    if (*only_root >= g.order()) throw PreconditionError("root " + std::to_string(*only_root) + " out of range");
    roots.push_back(*only_root);
  } else {
    for (Vertex v = 0; v < g.order(); ++v) roots.push_back(v);
  }

  auto audit_root = [&g, k, &budget](Vertex root) {
    RootThetaAudit out;
    out.root = root;
    const LayerDecomposition L = bfs_layers(g, root, k);
    for (int i = 1; i + 1 <= k; ++i) {
      LevelThetaAudit lv;
      lv.i = i;
      const BipartiteView b(g, L.layers[static_cast<std::size_t>(i)],
                            L.layers[static_cast<std::size_t>(i) + 1]);
      const auto th = find_theta_exact(b.materialize(), k, budget);
      lv.bipartite = th.status;
      if (th.found()) lv.counterexample = th.value;
      const auto wp = find_well_placed_theta_exact(trilayer(g, L, i), k, budget);
      lv.well_placed = wp.status;
      if (wp.found() && !lv.counterexample) {
        lv.counterexample = wp.value->theta;
        lv.witness = wp.value->witness;
      }
      if (th.exceeded() || wp.exceeded()) {
        throw BudgetExhausted("level " + std::to_string(i) + " from root " + std::to_string(root) +
                              " exceeded the search budget");
      }
      out.levels.push_back(std::move(lv));
    }
    return out;
  };

  LayerThetaAudit out;
  out.k = k;
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < roots.size(); start += width) {
    std::vector<std::future<RootThetaAudit>> batch;
    const std::size_t stop = std::min(roots.size(), start + width);
    for (std::size_t j = start; j < stop; ++j) {
      batch.push_back(std::async(std::launch::async, audit_root, roots[j]));
    }
    for (auto& f : batch) out.roots.push_back(f.get());
  }
  return out;
}

}  // namespace evencycle
