#include "evencycle/trilayer_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "evencycle/error.hpp"
#include "evencycle/numeric.hpp"

namespace evencycle {

namespace mp = boost::multiprecision;

const char* side_name(DegreeSide s) {
  switch (s) {
    case DegreeSide::A: return "A";
    case DegreeSide::B: return "B";
    case DegreeSide::C: return "C";
    case DegreeSide::D: return "D";
  }
  return "?";
}

const char* kind_name(BaseOutcome::Kind k) {
  switch (k) {
    case BaseOutcome::Kind::ThetaFound: return "theta";
    case BaseOutcome::Kind::Subgraph: return "subgraph";
    case BaseOutcome::Kind::Shrunk: return "shrunk";
  }
  return "?";
}

const char* kind_name(ChainResult::Kind k) {
  switch (k) {
    case ChainResult::Kind::ThetaFound: return "theta";
    case ChainResult::Kind::Subgraph: return "subgraph";
    case ChainResult::Kind::Failure: return "failure";
  }
  return "?";
}

namespace {

bool below(std::size_t degree, double floor) { return static_cast<double>(degree) < floor; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

bool satisfies(const TrilayeredView& t, const MinDegSpec& spec) {
  if (t.v1().empty() || t.v2().empty() || t.v3().empty()) return false;
  for (Vertex v : t.v1()) {
    if (below(t.degree_to(v, 2), spec.A)) return false;
  }
  for (Vertex v : t.v2()) {
    if (below(t.degree_to(v, 1), spec.B) || below(t.degree_to(v, 3), spec.C)) return false;
  }
  for (Vertex v : t.v3()) {
    if (below(t.degree_to(v, 2), spec.D)) return false;
  }
  return true;
}

PeelOutcome peel_to_min_deg(const TrilayeredView& t, const MinDegSpec& spec, int k) {
  const Graph& g = t.base();
  const std::size_t n = g.order();
  // to_low: degree toward the lower layer, to_high: toward the higher one.
  std::vector<std::size_t> to_low(n, 0), to_high(n, 0);
  std::vector<bool> alive(n, false);
  for (int l = 1; l <= 3; ++l) {
    for (Vertex v : t.layer(l)) {
      alive[v] = true;
      if (l > 1) to_low[v] = t.degree_to(v, l - 1);
      if (l < 3) to_high[v] = t.degree_to(v, l + 1);
    }
  }
  std::array<std::set<Vertex>, 4> bad;
  const auto refresh = [&](Vertex v) {
    switch (t.layer_of(v)) {
      case 1:
        if (below(to_high[v], spec.A)) bad[0].insert(v);
        break;
      case 2:
        if (below(to_low[v], spec.B)) bad[1].insert(v);
        if (below(to_high[v], spec.C)) bad[2].insert(v);
        break;
      case 3:
        if (below(to_low[v], spec.D)) bad[3].insert(v);
        break;
      default:
        break;
    }
  };
  for (int l = 1; l <= 3; ++l) {
    for (Vertex v : t.layer(l)) refresh(v);
  }

  PeelOutcome out;
  auto& tr = out.transcript;
  constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> removed_at(n, kNever);
  for (;;) {
    int side = 0;
    while (side < 4 && bad[static_cast<std::size_t>(side)].empty()) ++side;
    if (side == 4) break;
    const Vertex v = *bad[static_cast<std::size_t>(side)].begin();
    const int layer = t.layer_of(v);
    Removal r{v, layer, static_cast<DegreeSide>(side),
              side == 0 || side == 2 ? to_high[v] : to_low[v]};
    tr.removals.push_back(r);
    if (r.side == DegreeSide::C) tr.R.push_back(v);
    removed_at[v] = tr.removals.size();
    alive[v] = false;
    for (auto& s : bad) s.erase(v);
    for (Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      const int lw = t.layer_of(w);
      if (lw == layer + 1) --to_low[w];
      else if (lw == layer - 1) --to_high[w];
      else continue;
      refresh(w);
    }
  }
  std::sort(tr.R.begin(), tr.R.end());

  const std::size_t s_floor = 4 * static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  for (Vertex u : t.v2()) {
    if (t.degree_to(u, 1) >= s_floor) tr.S.push_back(u);
    for (Vertex w : t.neighbors_in(u, 3)) {
      if (removed_at[w] != kNever && removed_at[w] < removed_at[u]) tr.Eprime.emplace_back(u, w);
    }
  }
  std::set_difference(tr.R.begin(), tr.R.end(), tr.S.begin(), tr.S.end(),
                      std::back_inserter(tr.V2tilde));

  std::array<VertexSet, 3> survivors;
  for (int l = 1; l <= 3; ++l) {
    for (Vertex v : t.layer(l)) {
      if (alive[v]) survivors[static_cast<std::size_t>(l - 1)].push_back(v);
    }
  }
  if (!survivors[0].empty() && !survivors[1].empty() && !survivors[2].empty()) {
    out.survivors = std::move(survivors);
  }
  return out;
}

BaseOutcome base_step(const TrilayeredView& t, double a, const MinDegSpec& spec, double d, int k) {
  const std::size_t e12 = t.edge_count(1, 2);
  const double lhs = a * static_cast<double>(e12);
  const double rhs = (spec.A + k + 1) * static_cast<double>(t.v1().size()) +
                     spec.B * static_cast<double>(t.v2().size());
  // Relative slack of 1e-12 absorbs rounding when the two sides agree exactly.
  if (lhs < rhs * (1 - 1e-12)) {
    throw PreconditionError("edge budget fails: a*e(V1,V2) = " + fmt(lhs) +
                            " < (A+k+1)|V1| + B|V2| = " + fmt(rhs));
  }
  const double need = d + 4.0 * k * k + spec.C;
  for (Vertex v : t.v2()) {
    if (below(t.degree_to(v, 3), need)) {
      throw PreconditionError("V2 vertex " + std::to_string(v) + " has " +
                              std::to_string(t.degree_to(v, 3)) + " neighbours in V3 < d + 4k^2 + C = " +
                              fmt(need));
    }
  }

  BaseOutcome out;
  out.e12 = e12;
  PeelOutcome peeled = peel_to_min_deg(t, spec, k);
  out.transcript = std::move(peeled.transcript);
  if (peeled.survivors) {
    auto& s = *peeled.survivors;
    if (!satisfies(t.restrict(s[0], s[1], s[2]), spec)) {
      throw InvariantViolation("peel survivors do not meet the degree floors");
    }
    out.kind = BaseOutcome::Kind::Subgraph;
    out.subgraph = std::move(s);
    return out;
  }

  const VertexSet& tilde = out.transcript.V2tilde;
  for (Vertex v : tilde) out.e12_tilde += t.degree_to(v, 1);
  const bool keeps_edges = static_cast<double>(out.e12_tilde) >= (1 - a) * static_cast<double>(e12);
  const bool small = d > 0 && static_cast<double>(tilde.size()) <=
                                  spec.D * static_cast<double>(t.v3().size()) / d;
  if (keeps_edges && small) {
    out.kind = BaseOutcome::Kind::Shrunk;
    out.v2_tilde = tilde;
    return out;
  }

  // The edge accounting leaves G[V1, S] too dense to be theta-free.
  const BipartiteView dense(t.base(), t.v1(), out.transcript.S);
  std::optional<ThetaCertificate> cert;
  if (dense.vertex_count() > 0 &&
      dense.edge_count() >= static_cast<std::size_t>(k) * dense.vertex_count()) {
    cert = find_theta_avg_degree(dense, k);
  } else {
    cert = find_theta_k_core(BipartiteView(t.base(), t.v1(), t.v2()), k);
  }
  if (!cert) {
    throw InvariantViolation("peel emptied the view, the shrink bounds fail, and G[V1,V2] has no " +
                             std::to_string(k) + "-core");
  }
  out.kind = BaseOutcome::Kind::ThetaFound;
  out.theta = std::move(*cert);
  return out;
}

ConditionReport check_conditions(const TrilayeredView& t, double d, int k, double Delta) {
  const Real e12(t.edge_count(1, 2));
  const Real kk(k), lnk = mp::log(kk);
  const Real v1(t.v1().size()), v2(t.v2().size()), v3(t.v3().size());
  const auto item = [](const char* name, const Real& lhs, const Real& rhs) {
    return ConditionValue{name, static_cast<double>(lhs), static_cast<double>(rhs), lhs >= rhs};
  };
  ConditionReport r;
  r.items[0] = item("density_vs_v3", Real(d) * e12, 40 * kk * lnk * v3);
  r.items[1] = item("density_vs_v1", e12,
                    6 * kk * mp::pow(lnk + 1, 2) * mp::pow(2 * Real(Delta) * kk, 2 * k - 1) * v1);
  r.items[2] = item("density_vs_v2", e12, 20 * (lnk + 1) * v2);
  return r;
}

int default_chain_length(int k) {
  return std::max(1, static_cast<int>(std::ceil(std::log(static_cast<double>(k)))));
}

ChainResult iterate_chain(const TrilayeredView& t, double d, int k, double Delta, double C,
                          std::optional<int> steps) {
  if (k < 3) throw PreconditionError("the chain needs k >= 3");
  if (d <= 0) throw PreconditionError("d must be positive");
  const ConditionReport cond = check_conditions(t, d, k, Delta);
  for (const auto& c : cond.items) {
    if (!c.holds) {
      throw PreconditionError("condition " + c.name + " fails: " + fmt(c.lhs) + " < " + fmt(c.rhs));
    }
  }
  const double need = d + 4.0 * k * k + C;
  for (Vertex v : t.v2()) {
    if (below(t.degree_to(v, 3), need)) {
      throw PreconditionError("V2 vertex " + std::to_string(v) + " has " +
                              std::to_string(t.degree_to(v, 3)) +
                              " neighbours in V3 < d + 4k^2 + C = " + fmt(need));
    }
  }

  ChainResult res;
  res.t = steps.value_or(default_chain_length(k));
  if (res.t < 1) throw PreconditionError("chain length must be at least 1");
  const int T = res.t;
  const double n1 = static_cast<double>(t.v1().size());
  const double n3 = static_cast<double>(t.v3().size());
  const std::size_t e0 = t.edge_count(1, 2);
  const double d0 = static_cast<double>(e0) / static_cast<double>(t.v2().size());
  res.F = n3 > 0 ? d * static_cast<double>(e0) / (8.0 * k * n3)
                 : std::numeric_limits<double>::infinity();
  const double euler = std::exp(1.0);

  VertexSet current = t.v2();
  for (int i = 0; i < T; ++i) {
    const TrilayeredView view = t.restrict(t.v1(), current, t.v3());
    ChainStep st;
    st.i = i;
    st.v2_size = current.size();
    st.e_i = view.edge_count(1, 2);
    const double ei = static_cast<double>(st.e_i);
    st.a = 1.0 / (T - i + 1);
    st.d_i = ei / static_cast<double>(current.size());
    st.A = st.a * ei / (2 * n1) - k - 1;
    st.B = st.a * st.d_i / 4 + 5;
    st.D = std::min(2.0 * k, 8.0 * k / (st.a * st.d_i));
    st.budget_lhs = st.a * ei;
    st.budget_rhs = (st.A + k + 1) * n1 + st.B * static_cast<double>(current.size());
    const MinDegSpec spec{st.A, st.B, C, st.D};
    // a_i e_i >= (A_i+k+1)|V1| + B_i|V2^(i)| reduces to e_i >= 20 (t-i+1) |V2^(i)|.
    if (st.e_i < 20 * static_cast<std::size_t>(T - i + 1) * current.size()) {
      res.steps.push_back(st);
      res.kind = ChainResult::Kind::Failure;
      res.failure = "edge budget fails at step " + std::to_string(i);
      res.failure_detail.push_back({"edge_budget", st.budget_lhs, st.budget_rhs, false});
      return res;
    }
    const BaseOutcome out = base_step(view, st.a, spec, d, k);
    st.outcome = out.kind;
    if (out.kind == BaseOutcome::Kind::ThetaFound) {
      res.steps.push_back(st);
      res.kind = ChainResult::Kind::ThetaFound;
      res.theta = out.theta;
      return res;
    }
    if (out.kind == BaseOutcome::Kind::Subgraph) {
      res.steps.push_back(st);
      res.kind = ChainResult::Kind::Subgraph;
      res.subgraph = out.subgraph;
      res.spec = spec;
      const double anchor_rhs = 2.0 * k * std::pow(Delta * st.D, st.D - 1);
      res.subgraph_checks.push_back({"anchor_floor", st.A, anchor_rhs, st.A >= anchor_rhs});
      res.subgraph_checks.push_back(
          {"cycle_length_floor", (st.B - 4) * st.D, 2.0 * k, (st.B - 4) * st.D >= 2.0 * k});
      res.subgraph_checks.push_back({"b_at_least_5", st.B, 5.0, st.B >= 5.0});
      return res;
    }

    // Shrunk: record the per-step invariants for V2^(i+1).
    const VertexSet& next = out.v2_tilde;
    const double e_next = static_cast<double>(out.e12_tilde);
    const double n_next = static_cast<double>(next.size());
    auto& inv = st.invariants;
    inv.push_back({"edge_retention", e_next, (1 - st.a) * ei, e_next >= (1 - st.a) * ei});
    const double cum = static_cast<double>(T - i) / (T + 1) * static_cast<double>(e0);
    inv.push_back({"cumulative_retention", e_next, cum, e_next >= cum});
    inv.push_back({"shrink", n_next, st.D * n3 / d, n_next <= st.D * n3 / d});
    const double shrink_exp =
        euler * (T + 1) / (std::pow(5.0, i + 1) * T) * static_cast<double>(t.v2().size());
    inv.push_back({"shrink_exponential", n_next, shrink_exp, n_next <= shrink_exp});
    if (!next.empty()) {
      const double d_next = e_next / n_next;
      const double growth = st.a * st.d_i * (T - i) / (T + 1) * res.F;
      inv.push_back({"degree_growth", d_next, growth, d_next >= growth});
      const double ratio_bound = euler * (T + 1) / (std::pow(5.0, i + 1) * (T - i));
      inv.push_back({"degree_ratio", d0 / d_next, ratio_bound, d0 / d_next <= ratio_bound});
    }
    res.steps.push_back(st);
    if (next.empty()) {
      res.kind = ChainResult::Kind::Failure;
      res.failure = "chain subset became empty at step " + std::to_string(i);
      return res;
    }
    current = next;
  }

  // After T shrink steps G[V1, V2^(T)] is dense enough to hold a theta, or
  // the density assumptions were too weak.
  const BipartiteView last(t.base(), t.v1(), current);
  const std::size_t et = last.edge_count();
  if (et >= static_cast<std::size_t>(k) * last.vertex_count()) {
    res.kind = ChainResult::Kind::ThetaFound;
    res.theta = find_theta_avg_degree(last, k);
    return res;
  }
  res.kind = ChainResult::Kind::Failure;
  res.failure = "final subset is too sparse for a theta";
  const double avg = 2.0 * static_cast<double>(et) / static_cast<double>(last.vertex_count());
  const double dt = static_cast<double>(et) / static_cast<double>(current.size());
  res.failure_detail.push_back({"final_average_degree", avg, 2.0 * k, false});
  res.failure_detail.push_back({"final_v2_degree", dt, 2.0 * k, dt >= 2.0 * k});
  res.failure_detail.push_back({"initial_v2_degree", d0, 20.0 * (T + 1), d0 >= 20.0 * (T + 1)});
  res.failure_detail.push_back(cond.items[0]);
  res.failure_detail.push_back(cond.items[2]);
  return res;
}

}  // namespace evencycle
