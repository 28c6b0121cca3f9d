#include "evencycle/theta.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "evencycle/error.hpp"
#include "evencycle/rng.hpp"

namespace evencycle {

namespace {

template <class Adjacent>
bool check_theta(std::size_t n, const ThetaCertificate& cert, int k, Adjacent adjacent) {
  const auto& c = cert.cycle;
  const std::size_t L = c.size();
  if (L < 4 || L < static_cast<std::size_t>(2 * std::max(k, 0))) return false;
  std::vector<std::size_t> pos(n, L);
  for (std::size_t i = 0; i < L; ++i) {
    if (c[i] >= n || pos[c[i]] != L) return false;
    pos[c[i]] = i;
  }
  for (std::size_t i = 0; i < L; ++i) {
    if (!adjacent(c[i], c[(i + 1) % L])) return false;
  }
  const auto [a, b] = cert.chord;
  if (a >= n || b >= n || a == b || pos[a] == L || pos[b] == L) return false;
  const std::size_t gap = pos[a] > pos[b] ? pos[a] - pos[b] : pos[b] - pos[a];
  if (std::min(gap, L - gap) < 2) return false;
  return adjacent(a, b);
}

std::string describe_path(const std::vector<Vertex>& path) {
  std::ostringstream os;
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? " " : "") << path[i];
  return os.str();
}

}  // namespace

bool verify_theta(const Graph& g, const ThetaCertificate& cert, int k) {
  return check_theta(g.order(), cert, k, [&](Vertex u, Vertex v) { return g.has_edge(u, v); });
}

bool verify_theta_in_view(const TrilayeredView& t, const ThetaCertificate& cert, int k) {
  for (Vertex v : cert.cycle) {
    if (!t.contains(v)) return false;
  }
  return check_theta(t.base().order(), cert, k,
                     [&](Vertex u, Vertex v) { return t.retains(u, v); });
}

bool verify_well_placed(const TrilayeredView& t, const ThetaCertificate& cert,
                        const WellPlacedWitness& w, int k) {
  if (!verify_theta_in_view(t, cert, k)) return false;
  const std::set<Vertex> on_cert(cert.cycle.begin(), cert.cycle.end());
  std::size_t covered = 0;
  for (Vertex v : cert.cycle) {
    if (t.layer_of(v) != 2) continue;
    auto it = w.find(v);
    if (it == w.end()) return false;
    const Vertex target = it->second;
    if (!t.contains(target) || t.layer_of(target) != 1 || on_cert.count(target)) return false;
    if (!t.retains(v, target)) return false;
    ++covered;
  }
  return covered == w.size();
}

std::optional<WellPlacedWitness> well_placed_witness(const TrilayeredView& t,
                                                     const ThetaCertificate& cert) {
  const std::set<Vertex> on_cert(cert.cycle.begin(), cert.cycle.end());
  WellPlacedWitness w;
  for (Vertex v : cert.cycle) {
    if (t.layer_of(v) != 2) continue;
    bool found = false;
    for (Vertex x : t.neighbors_in(v, 1)) {
      if (!on_cert.count(x)) {
        w[v] = x;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return w;
}

PeelResult peel_min_degree(const Graph& g, std::size_t delta, std::optional<std::uint64_t> seed) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> alive(n, true);
  std::set<Vertex> violators;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < delta) violators.insert(v);
  }
  Rng rng(seed.value_or(0));
  PeelResult out;
  while (!violators.empty()) {
    auto it = violators.begin();
    if (seed) std::advance(it, static_cast<long>(uniform_below(rng, violators.size())));
    const Vertex v = *it;
    violators.erase(it);
    alive[v] = false;
    out.removal_order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] < delta) violators.insert(w);
    }
  }
  VertexSet survivors;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) survivors.push_back(v);
  }
  out.core = induced(g, survivors);
  return out;
}

ThetaCertificate find_theta_min_degree(const BipartiteView& b, int k) {
  if (k < 3) throw PreconditionError("find_theta_min_degree needs k >= 3");
  if (b.vertex_count() == 0) throw PreconditionError("bipartite view is empty");
  const Graph h = b.materialize();
  for (const auto* part : {&b.left(), &b.right()}) {
    for (Vertex v : *part) {
      if (h.degree(v) < static_cast<std::size_t>(k)) {
        throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                                std::to_string(h.degree(v)) + " < " + std::to_string(k));
      }
    }
  }

  // Walk greedily until the endpoint has no neighbour off the path.
  std::vector<Vertex> path{std::min(b.left().empty() ? b.right().front() : b.left().front(),
                                    b.right().empty() ? b.left().front() : b.right().front())};
  std::vector<std::size_t> pos(h.order(), SIZE_MAX);
  pos[path[0]] = 0;
  for (;;) {
    const Vertex x = path.back();
    auto next = std::find_if(h.neighbors(x).begin(), h.neighbors(x).end(),
                             [&](Vertex w) { return pos[w] == SIZE_MAX; });
    if (next == h.neighbors(x).end()) break;
    pos[*next] = path.size();
    path.push_back(*next);
  }

  const Vertex x = path.back();
  std::vector<std::size_t> at;
  for (Vertex w : h.neighbors(x)) at.push_back(pos[w]);
  std::sort(at.begin(), at.end());
  // Same-side neighbours sit at positions of equal parity, so the cycle from
  // the farthest one back to x has length >= 2k.
  ThetaCertificate cert;
  cert.cycle.assign(path.begin() + static_cast<long>(at[0]), path.end());
  const Vertex y = path[at[1]];
  cert.chord = {std::min(x, y), std::max(x, y)};
  if (!verify_theta(h, cert, k)) {
    throw InvariantViolation("maximal-path theta failed verification; path: " +
                             describe_path(path));
  }
  return cert;
}

std::optional<ThetaCertificate> find_theta_k_core(const BipartiteView& b, int k) {
  if (k < 3) throw PreconditionError("theta search needs k >= 3");
  const Graph h = b.materialize();
  const PeelResult peeled = peel_min_degree(h, static_cast<std::size_t>(k));
  const auto& core = peeled.core;
  if (core.graph.order() == 0) return std::nullopt;
  VertexSet left, right;
  for (Vertex v = 0; v < core.graph.order(); ++v) {
    (b.side(core.lift(v)) == Side::Left ? left : right).push_back(v);
  }
  const BipartiteView inner(core.graph, std::move(left), std::move(right));
  const ThetaCertificate local = find_theta_min_degree(inner, k);
  ThetaCertificate cert;
  for (Vertex v : local.cycle) cert.cycle.push_back(core.lift(v));
  const Vertex a = core.lift(local.chord.first), c = core.lift(local.chord.second);
  cert.chord = {std::min(a, c), std::max(a, c)};
  if (!verify_theta(h, cert, k)) {
    throw InvariantViolation("lifted theta certificate failed verification");
  }
  return cert;
}

ThetaCertificate find_theta_avg_degree(const BipartiteView& b, int k) {
  if (k < 3) throw PreconditionError("find_theta_avg_degree needs k >= 3");
  const std::size_t e = b.edge_count();
  const std::size_t n = b.vertex_count();
  if (n == 0 || e < static_cast<std::size_t>(k) * n) {
    const double avg = n == 0 ? 0.0 : 2.0 * static_cast<double>(e) / static_cast<double>(n);
    std::ostringstream os;
    os << "average degree " << avg << " < " << 2 * k;
    throw PreconditionError(os.str());
  }
  auto cert = find_theta_k_core(b, k);
  if (!cert) throw InvariantViolation("peeling below half the average degree emptied the graph");
  return *cert;
}

}  // namespace evencycle
