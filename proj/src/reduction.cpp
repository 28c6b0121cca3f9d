#include "evencycle/reduction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "evencycle/error.hpp"

namespace evencycle {

namespace mp = boost::multiprecision;

ReductionParams ReductionParams::make(const Rational& alpha, const Rational& c) {
  if (alpha <= 0 || alpha >= 1) throw PreconditionError("alpha must lie in (0, 1)");
  if (c <= 0) throw PreconditionError("c must be positive");
  ReductionParams p;
  p.alpha = alpha;
  p.c = c;
  const Rational r = Rational(2) / alpha;
  if (mp::denominator(r) == 1) {
    p.gamma_exact = rpow(alpha / 20, static_cast<unsigned>(mp::numerator(r)));
    p.gamma = to_real(*p.gamma_exact);
  } else {
    p.gamma = mp::exp(-to_real(r) * mp::log(Real(20) / to_real(alpha)));
  }
  return p;
}

const Check* ReductionResult::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Real ratio(const Graph& h, const Rational& beta) {
  if (h.order() == 0) throw PreconditionError("ratio of an empty graph");
  return Real(h.size()) / mp::pow(Real(h.order()), to_real(1 + beta));
}

namespace {

// ceil(x * v) for the set sizes, clamped to [1, v].
std::size_t scaled_size(const ReductionParams& p, const Rational& factor_over_gamma, std::size_t v) {
  BigInt size;
  if (p.gamma_exact) {
    size = ceil_rational(*p.gamma_exact * factor_over_gamma * v);
  } else {
    size = BigInt(static_cast<unsigned long long>(
        mp::ceil(p.gamma * to_real(factor_over_gamma) * Real(v))));
  }
  const std::size_t s = size > v ? v : static_cast<std::size_t>(size);
  return std::max<std::size_t>(s, 1);
}

InducedSubgraph compose(const InducedSubgraph& outer, const InducedSubgraph& inner) {
  InducedSubgraph out;
  out.graph = inner.graph;
  out.to_parent.reserve(inner.to_parent.size());
  for (Vertex v : inner.to_parent) out.to_parent.push_back(outer.lift(v));
  return out;
}

// lhs >= coeff * gamma * base^exp, using exact gamma when available.
bool holds_with_gamma(const ReductionParams& p, const Rational& lhs, const Rational& coeff,
                      const Rational& base, const Rational& exp) {
  if (p.gamma_exact) return compare_power(lhs, coeff * *p.gamma_exact, base, exp) >= 0;
  return to_real(lhs) >= to_real(coeff) * p.gamma * mp::pow(to_real(base), to_real(exp));
}

double power_value(const Rational& coeff, const Rational& base, const Rational& exp) {
  return static_cast<double>(to_real(coeff) * mp::pow(to_real(base), to_real(exp)));
}

}  // namespace

ReductionResult reduce(const Graph& g, const ReductionParams& p) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("reduce needs a nonempty graph");
  const Rational one_plus_alpha = 1 + p.alpha;
  if (compare_power(Rational(g.size()), p.c, Rational(n), one_plus_alpha) < 0) {
    throw PreconditionError("hypothesis fails: e(G) = " + std::to_string(g.size()) + " < c n^(1+alpha) = " +
                            std::to_string(power_value(p.c, Rational(n), one_plus_alpha)));
  }
  const Rational beta = p.alpha / 2;
  const Rational eta_over_gamma = Rational(2) / p.alpha;

  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  InducedSubgraph H = induced(g, all);
  ReductionResult result;

  for (;;) {
    const Graph& h = H.graph;
    const std::size_t v = h.order(), e = h.size();
    if (e == 0) throw ReductionCollapse("current subgraph has no edges", result.transcript);

    std::vector<Vertex> by_degree(v);
    std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    const std::size_t s_size = scaled_size(p, 1, v);
    std::vector<bool> in_s(v, false);
    for (std::size_t i = 0; i < s_size; ++i) in_s[by_degree[i]] = true;

    std::vector<std::size_t> to_s(v, 0);  // neighbours in S
    std::size_t s_incident = 0;
    for (Vertex u = 0; u < v; ++u) {
      for (Vertex w : h.neighbors(u)) to_s[u] += in_s[w];
    }
    std::size_t inside = 0;
    for (Vertex u = 0; u < v; ++u) {
      if (!in_s[u]) continue;
      s_incident += h.degree(u);
      inside += to_s[u];
    }
    s_incident -= inside / 2;  // edges inside S were counted from both ends

    ReductionStep step;
    step.vertices = v;
    step.edges = e;
    step.s_size = s_size;
    step.s_incident = s_incident;
    step.ratio_before = static_cast<double>(ratio(h, beta));

    if (4 * s_incident >= e) {
      const std::size_t t_size = scaled_size(p, eta_over_gamma, v);
      if (s_size + t_size < v) {
        std::vector<Vertex> rest;
        for (Vertex u = 0; u < v; ++u) {
          if (!in_s[u]) rest.push_back(u);
        }
        std::stable_sort(rest.begin(), rest.end(),
                         [&](Vertex a, Vertex b) { return to_s[a] > to_s[b]; });
        std::vector<Vertex> keep(by_degree.begin(), by_degree.begin() + static_cast<long>(s_size));
        keep.insert(keep.end(), rest.begin(), rest.begin() + static_cast<long>(t_size));
        InducedSubgraph next = compose(H, induced(h, keep));
        step.branch = 1;
        step.t_size = t_size;
        const Graph& hn = next.graph;
        step.ratio_after = hn.order() ? static_cast<double>(ratio(hn, beta)) : 0.0;
        step.ratio_increased =
            hn.size() > 0 && compare_power(Rational(hn.size(), e), 1, Rational(hn.order(), v),
                                           1 + beta) > 0;
        result.transcript.push_back(step);
        ++result.branch_one_steps;
        H = std::move(next);
        continue;
      }
    }

    // Strip the edges at S, then drop vertices of degree below e/(2v).
    std::vector<std::size_t> deg(v);
    for (Vertex u = 0; u < v; ++u) deg[u] = in_s[u] ? 0 : h.degree(u) - to_s[u];
    std::vector<bool> alive(v, true);
    std::vector<Vertex> queue;
    const auto low = [&](Vertex u) { return 2 * v * deg[u] < e; };
    for (Vertex u = 0; u < v; ++u) {
      if (low(u)) {
        alive[u] = false;
        queue.push_back(u);
      }
    }
    while (!queue.empty()) {
      const Vertex u = queue.back();
      queue.pop_back();
      if (in_s[u]) continue;  // its edges are already gone
      for (Vertex w : h.neighbors(u)) {
        if (!alive[w] || in_s[w]) continue;
        --deg[w];
        if (low(w)) {
          alive[w] = false;
          queue.push_back(w);
        }
      }
    }
    std::vector<Vertex> survivors;
    for (Vertex u = 0; u < v; ++u) {
      if (alive[u]) survivors.push_back(u);
    }
    step.branch = 2;
    if (survivors.empty()) {
      result.transcript.push_back(step);
      throw ReductionCollapse("peeling emptied the subgraph", result.transcript);
    }
    result.subgraph = compose(H, induced(h, survivors));
    step.ratio_after = static_cast<double>(ratio(result.subgraph.graph, beta));
    step.ratio_increased = false;
    result.transcript.push_back(step);

    const Graph& out = result.subgraph.graph;
    const DegreeStats ds = degree_stats(out);
    const Rational vo(out.order()), eo(out.size());
    const Rational dmin(ds.min_degree), dmax(ds.max_degree);
    auto& checks = result.checks;

    {
      Check c{"vertex_count", static_cast<double>(out.order()),
              static_cast<double>(to_real(p.c) * p.gamma *
                                  mp::pow(Real(n), to_real(p.alpha / 2))),
              holds_with_gamma(p, vo, p.c, Rational(n), p.alpha / 2)};
      checks.push_back(c);
    }
    checks.push_back({"edge_count", static_cast<double>(out.size()),
                      power_value(p.c / 4, vo, one_plus_alpha),
                      compare_power(eo, p.c / 4, vo, one_plus_alpha) >= 0});
    checks.push_back({"edge_count_half_exponent", static_cast<double>(out.size()),
                      power_value(p.c / 4, vo, 1 + p.alpha / 2),
                      compare_power(eo, p.c / 4, vo, 1 + p.alpha / 2) >= 0});
    checks.push_back({"min_degree", static_cast<double>(ds.min_degree),
                      power_value(p.c / 2, vo, p.alpha),
                      compare_power(dmin, p.c / 2, vo, p.alpha) >= 0});
    checks.push_back({"min_degree_average", static_cast<double>(ds.min_degree),
                      static_cast<double>(e) / (2.0 * static_cast<double>(v)), 2 * v * ds.min_degree >= e});
    {
      const double lhs = ds.min_degree ? static_cast<double>(ds.max_degree) / static_cast<double>(ds.min_degree)
                                       : std::numeric_limits<double>::infinity();
      bool holds;
      if (ds.min_degree == 0) holds = false;
      else if (p.gamma_exact) holds = dmax * *p.gamma_exact <= dmin;
      else holds = Real(ds.max_degree) * p.gamma <= Real(ds.min_degree);
      checks.push_back({"ratio_window", lhs, static_cast<double>(1 / p.gamma), holds});
    }
    return result;
  }
}

}  // namespace evencycle
