#include "evencycle/path_embed.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "evencycle/error.hpp"

namespace evencycle {

namespace {

constexpr double kSlack = 1e-12;
constexpr std::size_t kMaxExtractAttempts = 20000;

bool at_least(double lhs, double rhs) {
  return lhs >= rhs - kSlack * std::max(1.0, std::abs(rhs));
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::vector<char> marks(const TrilayeredView& t, const std::vector<Vertex>& a,
                        const std::vector<Vertex>& b = {}) {
  std::vector<char> m(t.base().order(), 0);
  for (Vertex v : a) m[v] = 1;
  for (Vertex v : b) m[v] = 1;
  return m;
}

std::vector<Vertex> concat(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t count_marked(const VertexSet& s, const std::vector<char>& m) {
  std::size_t c = 0;
  for (Vertex v : s) c += m[v] != 0;
  return c;
}

std::optional<Vertex> fresh_v1_neighbour(const TrilayeredView& t, Vertex v,
                                         const std::vector<char>& taken) {
  for (Vertex x : t.neighbors_in(v, 1)) {
    if (!taken[x]) return x;
  }
  return std::nullopt;
}

}  // namespace

const char* kind_name(EmbedOutcome::Kind k) {
  switch (k) {
    case EmbedOutcome::Kind::ThetaInV2V3: return "theta_in_v2v3";
    case EmbedOutcome::Kind::WellPlaced: return "well_placed";
    case EmbedOutcome::Kind::BudgetReport: return "budget_report";
  }
  return "?";
}

std::vector<std::size_t> GoodPath::anchor_positions(const TrilayeredView& t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (t.layer_of(vertices[i]) == 1) out.push_back(i);
  }
  return out;
}

bool check_good(const TrilayeredView& t, const GoodPath& p) {
  const auto& v = p.vertices;
  if (v.empty() || t.layer_of(v.front()) != 1 || t.layer_of(v.back()) != 1) return false;
  std::set<Vertex> seen;
  for (Vertex x : v) {
    if (!t.contains(x) || !seen.insert(x).second) return false;
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (!t.retains(v[i], v[i + 1])) return false;
  }
  std::size_t v2_count = 0;
  for (Vertex x : v) {
    if (t.layer_of(x) != 2) continue;
    ++v2_count;
    auto it = p.goodness.find(x);
    if (it == p.goodness.end()) return false;
    const Vertex y = it->second;
    if (t.layer_of(y) != 1 || seen.count(y) || !t.retains(x, y)) return false;
  }
  return v2_count == p.goodness.size();
}

void check_embed_preconditions(const TrilayeredView& t, const EmbedParams& p) {
  const int k = p.k;
  if (k < 3) throw PreconditionError("path embedding needs k >= 3");
  if (p.D < 1) throw PreconditionError("segment parameter D must be >= 1");
  if (p.d <= 0 || p.Delta <= 0) throw PreconditionError("d and Delta must be positive");
  if (p.B < 5) throw PreconditionError("B = " + fmt(p.B) + " < 5");
  const double anchor_floor = 2.0 * k * std::pow(p.Delta * p.D, p.D - 1);
  if (!at_least(p.A, anchor_floor)) {
    throw PreconditionError("A = " + fmt(p.A) + " < 2k(Delta D)^(D-1) = " + fmt(anchor_floor));
  }
  if ((p.B - 4) * p.D < 2 * k - kSlack) {
    throw PreconditionError("(B-4)D = " + fmt((p.B - 4) * p.D) + " < 2k = " + std::to_string(2 * k));
  }
  const double C = p.d + k;
  auto floor = [&](Vertex v, int to, double bound, const char* what) {
    const auto deg = t.degree_to(v, to);
    if (!at_least(static_cast<double>(deg), bound)) {
      throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(deg) + " " +
                              what + " neighbours, below " + fmt(bound));
    }
  };
  for (Vertex v : t.v1()) floor(v, 2, p.A, "V2");
  for (Vertex v : t.v2()) {
    floor(v, 1, p.B, "V1");
    floor(v, 3, C, "V3");
    const auto up = t.degree_to(v, 3);
    if (static_cast<double>(up) > p.Delta * p.d * (1 + kSlack)) {
      throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(up) +
                              " V3 neighbours, above Delta*d = " + fmt(p.Delta * p.d));
    }
  }
  for (Vertex v : t.v3()) floor(v, 2, p.D, "V2");
}

std::optional<EmbedOutcome> extract_theta(const TrilayeredView& t, const std::vector<Vertex>& seq,
                                          Vertex x, int k) {
  const std::size_t L = seq.size();
  std::optional<std::size_t> px;
  std::vector<std::size_t> hits;
  for (std::size_t q = 0; q < L; ++q) {
    if (seq[q] == x) px = q;
    else if (t.retains(x, seq[q])) hits.push_back(q);
  }

  // Spans (lo, hi) of seq closed through x; chords go from x to a hit strictly inside.
  struct Span {
    std::size_t lo, hi, length;
  };
  std::vector<Span> spans;
  const std::size_t min_len = static_cast<std::size_t>(std::max(4, 2 * k));
  if (px) {
    for (std::size_t q : hits) {
      if (q >= *px + 2) spans.push_back({*px, q, q - *px + 1});
      else if (q + 2 <= *px) spans.push_back({q, *px, *px - q + 1});
    }
  } else {
    for (std::size_t a = 0; a < hits.size(); ++a) {
      for (std::size_t b = a + 2; b < hits.size(); ++b) {
        spans.push_back({hits[a], hits[b], hits[b] - hits[a] + 2});
      }
    }
  }
  std::erase_if(spans, [&](const Span& s) { return s.length < min_len; });
  // Short cycles leave more V1 vertices free for the witness.
  std::stable_sort(spans.begin(), spans.end(),
                   [](const Span& a, const Span& b) { return a.length < b.length; });

  std::optional<EmbedOutcome> fallback;
  std::size_t attempts = 0;
  for (const Span& s : spans) {
    std::vector<Vertex> cycle;
    if (!px) cycle.push_back(x);
    cycle.insert(cycle.end(), seq.begin() + static_cast<long>(s.lo),
                 seq.begin() + static_cast<long>(s.hi) + 1);
    for (std::size_t q : hits) {
      if (q <= s.lo || q >= s.hi) continue;
      if (px && (q + 1 == *px || q == *px + 1)) continue;
      if (++attempts > kMaxExtractAttempts) return fallback;
      ThetaCertificate cert{cycle, {std::min(x, seq[q]), std::max(x, seq[q])}};
      if (!verify_theta_in_view(t, cert, k)) continue;
      if (auto w = well_placed_witness(t, cert); w && verify_well_placed(t, cert, *w, k)) {
        EmbedOutcome o;
        o.kind = EmbedOutcome::Kind::WellPlaced;
        o.cert = std::move(cert);
        o.witness = std::move(*w);
        return o;
      }
      const bool upper = std::all_of(cycle.begin(), cycle.end(),
                                     [&](Vertex v) { return t.layer_of(v) >= 2; });
      if (upper && !fallback) {
        EmbedOutcome o;
        o.kind = EmbedOutcome::Kind::ThetaInV2V3;
        o.cert = std::move(cert);
        fallback = std::move(o);
      }
    }
  }
  return fallback;
}

ProcedureOneResult procedure_one(const TrilayeredView& t, const std::vector<Vertex>& P,
                                 ExtensionState& state, double d, int k) {
  const auto need = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(d / (2 * k + 1) - kSlack)));
  const auto onP = marks(t, P);
  std::vector<char> inT(t.base().order(), 0);
  state.S1.clear();
  state.F1.clear();
  state.T_u.clear();
  state.T.clear();
  for (const auto& [u, q] : state.Q) {
    const std::set<Vertex> onQ(q.begin(), q.end());
    VertexSet M;
    for (Vertex w : t.neighbors_in(u, 3)) {
      if (!inT[w] && !onP[w] && !onQ.count(w)) M.push_back(w);
    }
    if (M.size() >= need) {
      M.resize(need);
      for (Vertex w : M) {
        inT[w] = 1;
        state.T.push_back(w);
      }
      state.T_u[u] = std::move(M);
      state.S1.push_back(u);
    } else {
      state.F1.push_back(u);
    }
  }
  std::sort(state.T.begin(), state.T.end());

  ProcedureOneResult r;
  if (2 * state.S1.size() < state.Q.size() && !state.F1.empty() && !state.T.empty()) {
    const BipartiteView b(t.base(), state.F1, state.T);
    if (b.edge_count() >= static_cast<std::size_t>(k) * b.vertex_count()) {
      r.theta = find_theta_avg_degree(b, k);
    } else {
      r.theta = find_theta_k_core(b, k);
    }
  }
  return r;
}

void procedure_two(const TrilayeredView& t, const std::vector<Vertex>& P, ExtensionState& state,
                   double Delta, double d, int k, int i, int D) {
  const auto onP = marks(t, P);
  std::vector<char> used(t.base().order(), 0);
  std::map<Vertex, std::vector<Vertex>> next;
  state.S2.clear();
  state.F2.clear();
  state.Dset.clear();
  VertexSet reached;
  for (Vertex u : state.S1) {
    const auto& q = state.Q.at(u);
    const std::set<Vertex> onQ(q.begin(), q.end());
    bool any = false;
    for (Vertex v : state.T_u.at(u)) {
      for (Vertex w : t.neighbors_in(v, 2)) {
        reached.push_back(w);
        if (onP[w] || used[w] || onQ.count(w)) continue;
        used[w] = 1;
        state.Dset.push_back(w);
        auto path = q;
        path.push_back(v);
        path.push_back(w);
        next[w] = std::move(path);
        any = true;
        break;
      }
    }
    if (!any) state.F2.push_back(u);
  }
  std::sort(state.Dset.begin(), state.Dset.end());
  state.S2 = state.Dset;
  state.eps = static_cast<double>(D - i) / (4.0 * (2 * k + 1) * Delta);
  const double target = state.eps * static_cast<double>(state.S1.size()) - 2.0 * k;
  if (!at_least(static_cast<double>(state.S2.size()), target)) {
    std::sort(reached.begin(), reached.end());
    reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
    for (Vertex w : reached) {
      const auto up = t.degree_to(w, 3);
      if (static_cast<double>(up) > Delta * d * (1 + kSlack)) {
        throw PreconditionError("vertex " + std::to_string(w) + " has " + std::to_string(up) +
                                " V3 neighbours, above Delta*d = " + fmt(Delta * d));
      }
    }
    state.notes.push_back("extension count " + std::to_string(state.S2.size()) +
                          " below eps|S1| - 2k = " + fmt(target));
  }
  state.Q = std::move(next);
}

std::variant<GoodPath, EmbedOutcome> extend_once(const TrilayeredView& t, const GoodPath& p,
                                                 const EmbedParams& params,
                                                 std::vector<RoundTrace>* trace) {
  const int k = params.k;
  const auto& P = p.vertices;
  const auto anchors = p.anchor_positions(t);
  const std::size_t anchor_index = anchors.empty() ? 0 : anchors.size() - 1;
  std::vector<RoundTrace> rounds;

  auto flush = [&] {
    if (trace) trace->insert(trace->end(), rounds.begin(), rounds.end());
  };
  auto finish = [&](EmbedOutcome o) {
    flush();
    o.longest = p;
    return o;
  };
  auto report = [&](std::string what, double lhs, double rhs) {
    EmbedOutcome o;
    o.kind = EmbedOutcome::Kind::BudgetReport;
    o.shortfall = Shortfall{std::move(what), lhs, rhs};
    return finish(std::move(o));
  };

  RoundTrace rt;
  rt.anchor = anchor_index;
  const auto onP = marks(t, P);

  // An anchor with k V2 neighbours on the path closes a theta through itself.
  for (std::size_t pos : anchors) {
    const Vertex a = P[pos];
    const std::size_t on_path = count_marked(t.neighbors_in(a, 2), onP);
    if (on_path < static_cast<std::size_t>(k)) continue;
    if (auto o = extract_theta(t, P, a, k)) return finish(std::move(*o));
    rt.notes.push_back("anchor " + std::to_string(a) + " has " + std::to_string(on_path) +
                       " V2 neighbours on the path but no one-sided theta");
  }

  ExtensionState st;
  for (Vertex u : t.neighbors_in(P.back(), 2)) {
    if (!onP[u]) st.Q[u] = {u};
  }
  if (st.Q.empty()) return report("frontier_empty", 0, 1);

  for (int i = 0; i + 1 < params.D; ++i) {
    rt.i = i;
    rt.u_size = st.Q.size();
    st.i = i;
    st.notes.clear();

    for (auto it = st.Q.begin(); it != st.Q.end();) {
      const auto onPQ = marks(t, P, it->second);
      const std::size_t back = count_marked(t.neighbors_in(it->first, 3), onPQ);
      if (back <= static_cast<std::size_t>(k)) {
        ++it;
        continue;
      }
      if (auto o = extract_theta(t, concat(P, it->second), it->first, k)) {
        rounds.push_back(rt);
        return finish(std::move(*o));
      }
      rt.notes.push_back("frontier vertex " + std::to_string(it->first) + " dropped: " +
                         std::to_string(back) + " V3 neighbours on its path");
      it = st.Q.erase(it);
    }
    if (st.Q.empty()) {
      rounds.push_back(rt);
      return report("frontier_empty", 0, 1);
    }

    const auto r1 = procedure_one(t, P, st, params.d, k);
    rt.s1 = st.S1.size();
    rt.f1 = st.F1.size();
    rt.t_size = st.T.size();
    if (r1.theta) {
      EmbedOutcome o;
      o.kind = EmbedOutcome::Kind::ThetaInV2V3;
      o.cert = *r1.theta;
      if (!verify_theta_in_view(t, o.cert, k)) {
        throw InvariantViolation("theta between F1 and T failed verification");
      }
      rounds.push_back(rt);
      return finish(std::move(o));
    }
    if (2 * st.S1.size() < rt.u_size) {
      rt.notes.push_back("|S1| < |U|/2 and no theta between F1 and T");
    }

    // Each v in T should keep D-i V2 neighbours usable for the next step.
    const std::size_t tail_from = P.size() > static_cast<std::size_t>(2 * k) ? P.size() - 2 * k : 0;
    for (Vertex u : st.S1) {
      const auto& q = st.Q.at(u);
      const auto onPQ = marks(t, P, q);
      for (Vertex v : st.T_u.at(u)) {
        std::size_t usable = 0;
        for (Vertex w : t.neighbors_in(v, 2)) {
          if (!onPQ[w]) ++usable;
        }
        for (std::size_t j = tail_from; j < P.size(); ++j) usable += t.retains(v, P[j]);
        if (usable >= static_cast<std::size_t>(params.D - i)) continue;
        auto seq = concat(P, q);
        if (auto o = extract_theta(t, seq, v, k)) {
          rounds.push_back(rt);
          return finish(std::move(*o));
        }
        rt.notes.push_back("V3 vertex " + std::to_string(v) + " has " + std::to_string(usable) +
                           " usable V2 neighbours, below " + std::to_string(params.D - i));
      }
    }

    procedure_two(t, P, st, params.Delta, params.d, k, i, params.D);
    rt.eps = st.eps;
    rt.s2 = st.S2.size();
    rt.notes.insert(rt.notes.end(), st.notes.begin(), st.notes.end());

    // New endpoints need a V1 neighbour off the path.
    for (auto it = st.Q.begin(); it != st.Q.end();) {
      if (fresh_v1_neighbour(t, it->first, onP)) {
        ++it;
        continue;
      }
      if (auto o = extract_theta(t, P, it->first, k)) {
        rounds.push_back(rt);
        return finish(std::move(*o));
      }
      rt.notes.push_back("endpoint " + std::to_string(it->first) +
                         " dropped: every V1 neighbour is on the path");
      it = st.Q.erase(it);
    }

    // Keep endpoints that avoid every kept path and whose own path avoids kept endpoints.
    std::set<Vertex> kept_vertices, kept_endpoints;
    for (auto it = st.Q.begin(); it != st.Q.end();) {
      const auto& q = it->second;
      const bool clash = kept_vertices.count(it->first) ||
                         std::any_of(q.begin(), q.end(), [&](Vertex v) { return kept_endpoints.count(v); });
      if (clash) {
        it = st.Q.erase(it);
        continue;
      }
      kept_vertices.insert(q.begin(), q.end());
      kept_endpoints.insert(it->first);
      ++it;
    }

    rt.survivors = st.Q.size();
    rt.recurrence_bound = st.eps / (2.0 * (i + 1)) * static_cast<double>(rt.u_size) - 2.0 * k;
    rt.recurrence_holds = at_least(static_cast<double>(rt.survivors), rt.recurrence_bound);
    rounds.push_back(rt);
    rt = RoundTrace{};
    rt.anchor = anchor_index;
    if (st.Q.empty()) return report("frontier_empty", 0, 1);
  }

  rt.i = params.D - 1;
  rt.u_size = st.Q.size();
  for (const auto& [u, q] : st.Q) {
    const auto y = fresh_v1_neighbour(t, u, onP);
    if (!y) continue;
    GoodPath np;
    np.vertices = concat(P, q);
    np.vertices.push_back(*y);
    const auto taken = marks(t, np.vertices);
    bool good = true;
    for (Vertex v : np.vertices) {
      if (t.layer_of(v) != 2) continue;
      if (const auto z = fresh_v1_neighbour(t, v, taken)) {
        np.goodness[v] = *z;
        continue;
      }
      if (auto o = extract_theta(t, np.vertices, v, k)) {
        rounds.push_back(rt);
        return finish(std::move(*o));
      }
      rt.notes.push_back("vertex " + std::to_string(v) + " lost its V1 witness via endpoint " +
                         std::to_string(u));
      good = false;
      break;
    }
    if (!good) continue;
    rt.survivors = 1;
    rounds.push_back(rt);
    flush();
    return np;
  }
  rounds.push_back(rt);
  if (!st.Q.empty()) {
    const auto& [u, q] = *st.Q.begin();
    if (auto o = extract_theta(t, concat(P, q), u, k)) return finish(std::move(*o));
  }
  return report("no_fresh_anchor", 0, 1);
}

EmbedOutcome embed_or_theta(const TrilayeredView& t, const EmbedParams& params) {
  if (t.v1().empty() || t.v2().empty() || t.v3().empty()) {
    EmbedOutcome o;
    o.shortfall = Shortfall{"empty_layer", 0, 1};
    return o;
  }
  check_embed_preconditions(t, params);
  GoodPath p;
  p.vertices = {t.v1().front()};
  std::vector<RoundTrace> trace;
  for (std::size_t step = 0; step <= t.v1().size(); ++step) {
    auto r = extend_once(t, p, params, &trace);
    if (auto* o = std::get_if<EmbedOutcome>(&r)) {
      o->trace = std::move(trace);
      return std::move(*o);
    }
    p = std::get<GoodPath>(std::move(r));
    if (!check_good(t, p)) throw InvariantViolation("extended path is not good");
  }
  throw InvariantViolation("path extension did not terminate");
}

}  // namespace evencycle
