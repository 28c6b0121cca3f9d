#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond the Graph container, and favour obviousness over speed; keep inputs
// small (n <= 14).

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "evencycle/graph.hpp"
#include "evencycle/numeric.hpp"
#include "evencycle/theta.hpp"

namespace oracle {

using evencycle::Graph;
using evencycle::Vertex;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

/// Every simple cycle, each listed once per rotation and direction (callers
/// only test existence). min_len <= length <= max_len.
inline void each_cycle(const Graph& g, std::size_t min_len, std::size_t max_len,
                       const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const auto a = matrix(g);
  const std::size_t n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void()> grow = [&] {
    if (stop) return;
    const Vertex last = path.back();
    if (path.size() >= min_len && path.size() >= 3 && a[last][path[0]]) {
      if (visit(path)) {
        stop = true;
        return;
      }
    }
    if (path.size() == max_len) return;
    for (Vertex w = 0; w < n && !stop; ++w) {
      // Smallest vertex of the cycle goes first, which keeps the search finite enough.
      if (used[w] || !a[last][w] || w < path[0]) continue;
      used[w] = true;
      path.push_back(w);
      grow();
      path.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 0; s < n && !stop; ++s) {
    path.assign(1, s);
    used[s] = true;
    grow();
    used[s] = false;
  }
}

inline bool has_cycle_of_length(const Graph& g, std::size_t len) {
  bool found = false;
  each_cycle(g, len, len, [&](const std::vector<Vertex>&) { return found = true; });
  return found;
}

inline bool has_chord(const std::vector<std::vector<bool>>& a, const std::vector<Vertex>& c) {
  const std::size_t L = c.size();
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;
      if (a[c[i]][c[j]]) return true;
    }
  }
  return false;
}

/// A cycle of length >= max(2k, 4) with a chord.
inline bool has_theta(const Graph& g, int k) {
  const auto a = matrix(g);
  bool found = false;
  each_cycle(g, static_cast<std::size_t>(std::max(2 * k, 4)), g.order(),
             [&](const std::vector<Vertex>& c) { return found = has_chord(a, c); });
  return found;
}

/// Independent certificate check against the whole graph.
inline bool is_theta(const Graph& g, const evencycle::ThetaCertificate& cert, int k) {
  const auto& c = cert.cycle;
  const std::size_t L = c.size();
  if (L < 4 || static_cast<int>(L) < 2 * k) return false;
  if (std::set<Vertex>(c.begin(), c.end()).size() != L) return false;
  for (Vertex v : c) {
    if (v >= g.order()) return false;
  }
  const auto a = matrix(g);
  for (std::size_t i = 0; i < L; ++i) {
    if (!a[c[i]][c[(i + 1) % L]]) return false;
  }
  auto ia = std::find(c.begin(), c.end(), cert.chord.first);
  auto ib = std::find(c.begin(), c.end(), cert.chord.second);
  if (ia == c.end() || ib == c.end() || ia == ib) return false;
  const auto gap = static_cast<std::size_t>(std::abs(ia - ib));
  if (gap == 1 || gap == L - 1) return false;
  return a[cert.chord.first][cert.chord.second];
}

struct Layers {
  std::vector<int> layer;  // 0 when outside, else 1..3
};

inline Layers layers_of(const Graph& g, const std::array<evencycle::VertexSet, 3>& l) {
  Layers out;
  out.layer.assign(g.order(), 0);
  for (int i = 0; i < 3; ++i) {
    for (Vertex v : l[static_cast<std::size_t>(i)]) out.layer[v] = i + 1;
  }
  return out;
}

/// Graph keeping only edges between layers 1-2 and 2-3.
inline Graph layered_graph(const Graph& g, const Layers& L) {
  std::vector<evencycle::Edge> edges;
  for (auto [u, v] : g.edges()) {
    const int a = L.layer[u], b = L.layer[v];
    if (a && b && std::abs(a - b) == 1) edges.emplace_back(u, v);
  }
  return Graph::from_edges(g.order(), edges);
}

inline bool well_placed(const Graph& layered, const Layers& L, const std::vector<Vertex>& cycle) {
  const std::set<Vertex> on(cycle.begin(), cycle.end());
  for (Vertex v : cycle) {
    if (L.layer[v] != 2) continue;
    bool ok = false;
    for (Vertex w : layered.neighbors(v)) ok = ok || (L.layer[w] == 1 && !on.count(w));
    if (!ok) return false;
  }
  return true;
}

inline bool has_well_placed_theta(const Graph& g, const std::array<evencycle::VertexSet, 3>& l, int k) {
  const Layers L = layers_of(g, l);
  const Graph h = layered_graph(g, L);
  const auto a = matrix(h);
  bool found = false;
  each_cycle(h, static_cast<std::size_t>(std::max(2 * k, 4)), h.order(), [&](const std::vector<Vertex>& c) {
    return found = has_chord(a, c) && well_placed(h, L, c);
  });
  return found;
}

inline bool is_well_placed(const Graph& g, const std::array<evencycle::VertexSet, 3>& l,
                           const evencycle::ThetaCertificate& cert, const evencycle::WellPlacedWitness& w,
                           int k) {
  const Layers L = layers_of(g, l);
  const Graph h = layered_graph(g, L);
  if (!is_theta(h, cert, k)) return false;
  const std::set<Vertex> on(cert.cycle.begin(), cert.cycle.end());
  std::size_t v2 = 0;
  for (Vertex v : cert.cycle) {
    if (L.layer[v] == 0) return false;
    if (L.layer[v] != 2) continue;
    ++v2;
    auto it = w.find(v);
    if (it == w.end() || L.layer[it->second] != 1 || on.count(it->second) || !h.has_edge(v, it->second)) {
      return false;
    }
  }
  return v2 == w.size();
}

/// Distances from root by repeated relaxation, no queue.
inline std::vector<int> distances(const Graph& g, Vertex root) {
  std::vector<int> d(g.order(), -1);
  d[root] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : g.edges()) {
      for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
        if (d[x] >= 0 && (d[y] < 0 || d[y] > d[x] + 1)) {
          d[y] = d[x] + 1;
          changed = true;
        }
      }
    }
  }
  return d;
}

inline std::size_t count_between(const Graph& g, const std::set<Vertex>& a, const std::set<Vertex>& b) {
  std::size_t c = 0;
  for (auto [u, v] : g.edges()) c += (a.count(u) && b.count(v)) || (a.count(v) && b.count(u));
  return c;
}

/// Exact rational of a double (every finite double is a dyadic rational).
inline evencycle::Rational exact(double x) {
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  evencycle::Rational r(mant);
  const int shift = e - 53;
  if (shift >= 0) r *= evencycle::Rational(boost::multiprecision::pow(evencycle::BigInt(2), static_cast<unsigned>(shift)));
  else r /= evencycle::Rational(boost::multiprecision::pow(evencycle::BigInt(2), static_cast<unsigned>(-shift)));
  return r;
}

/// Connected check via distances.
inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = distances(g, 0);
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

}  // namespace oracle
