#include "evencycle/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace evencycle {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

// Distances to s inside the subgraph of allowed vertices with id >= s.
std::vector<int> distances_to(const Graph& g, Vertex s, const std::vector<bool>& allowed) {
  std::vector<int> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (w > s && allowed[w] && dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

struct CycleSearch {
  const Graph& g;
  std::size_t length;
  const std::vector<bool>& allowed;
  const std::function<bool(const Cycle&)>& visit;
  std::uint64_t max_steps;
  std::uint64_t& steps;

  Vertex anchor = 0;
  std::vector<int> dist{};
  std::vector<bool> on_path{};
  Cycle path{};
  bool stopped = false;
  bool exhausted = false;

  void extend() {
    const Vertex v = path.back();
    if (path.size() == length) {
      if (path[1] < path.back() && g.has_edge(v, anchor)) stopped = visit(path);
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (w <= anchor || !allowed[w] || on_path[w]) continue;
      // After appending w, (length - |path| - 1) more vertices plus the closing edge remain.
      if (dist[w] == kUnreached ||
          static_cast<std::size_t>(dist[w]) > length - path.size()) {
        continue;
      }
      if (++steps > max_steps) {
        exhausted = true;
        return;
      }
      on_path[w] = true;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = false;
      if (stopped || exhausted) return;
    }
  }
};

// Smallest chord (by (min, max)) of a cycle in g, if any.
std::optional<Edge> smallest_chord(const Graph& g, const Cycle& cycle) {
  const std::size_t L = cycle.size();
  std::optional<Edge> best;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;
      if (!g.has_edge(cycle[i], cycle[j])) continue;
      Edge e{std::min(cycle[i], cycle[j]), std::max(cycle[i], cycle[j])};
      if (!best || e < *best) best = e;
    }
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> chord_positions(const Graph& g, const Cycle& cycle) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t L = cycle.size();
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;
      if (g.has_edge(cycle[i], cycle[j])) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end(), [&](auto a, auto b) {
    auto key = [&](auto p) {
      return Edge{std::min(cycle[p.first], cycle[p.second]), std::max(cycle[p.first], cycle[p.second])};
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace

bool enumerate_cycles(const Graph& g, std::size_t length, const std::vector<bool>& allowed,
                      const std::function<bool(const Cycle&)>& visit, std::uint64_t max_steps,
                      std::uint64_t& steps) {
  if (length < 3) return true;
  CycleSearch search{g, length, allowed, visit, max_steps, steps};
  search.on_path.assign(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!allowed[s] || g.degree(s) < 2) continue;
    search.anchor = s;
    search.dist = distances_to(g, s, allowed);
    search.path = {s};
    search.on_path[s] = true;
    search.extend();
    search.on_path[s] = false;
    if (search.exhausted) return false;
    if (search.stopped) return true;
  }
  return true;
}

SearchResult<Cycle> find_c2k_exact(const Graph& g, int k, const SearchBudget& budget) {
  SearchResult<Cycle> result;
  if (g.order() > budget.max_vertices) {
    result.status = SearchStatus::BudgetExceeded;
    return result;
  }
  const std::vector<bool> allowed(g.order(), true);
  const bool complete = enumerate_cycles(
      g, static_cast<std::size_t>(2 * k), allowed,
      [&](const Cycle& c) {
        result.value = c;
        return true;
      },
      budget.max_steps, result.steps);
  if (!complete) {
    result.status = SearchStatus::BudgetExceeded;
    result.value.reset();
  } else {
    result.status = result.value ? SearchStatus::Found : SearchStatus::None;
  }
  return result;
}

SearchResult<ThetaCertificate> find_theta_exact(const Graph& g, int k, const SearchBudget& budget) {
  SearchResult<ThetaCertificate> result;
  if (g.order() > budget.max_vertices) {
    result.status = SearchStatus::BudgetExceeded;
    return result;
  }
  const std::vector<bool> allowed(g.order(), true);
  const std::size_t first = static_cast<std::size_t>(std::max(2 * k, 4));
  for (std::size_t L = first; L <= g.order(); ++L) {
    const bool complete = enumerate_cycles(
        g, L, allowed,
        [&](const Cycle& c) {
          if (auto chord = smallest_chord(g, c)) {
            result.value = ThetaCertificate{c, *chord};
            return true;
          }
          return false;
        },
        budget.max_steps, result.steps);
    if (!complete) {
      result.status = SearchStatus::BudgetExceeded;
      result.value.reset();
      return result;
    }
    if (result.value) {
      result.status = SearchStatus::Found;
      return result;
    }
  }
  result.status = SearchStatus::None;
  return result;
}

SearchResult<WellPlacedTheta> find_well_placed_theta_exact(const TrilayeredView& t, int k,
                                                           const SearchBudget& budget) {
  SearchResult<WellPlacedTheta> result;
  const std::size_t view_order = t.v1().size() + t.v2().size() + t.v3().size();
  if (view_order > budget.max_vertices) {
    result.status = SearchStatus::BudgetExceeded;
    return result;
  }
  const Graph h = t.materialize();
  std::vector<bool> allowed(h.order(), false);
  for (int l = 1; l <= 3; ++l) {
    for (Vertex v : t.layer(l)) allowed[v] = true;
  }
  const std::size_t first = static_cast<std::size_t>(std::max(2 * k, 4));
  for (std::size_t L = first; L <= view_order; ++L) {
    const bool complete = enumerate_cycles(
        h, L, allowed,
        [&](const Cycle& c) {
          for (auto [i, j] : chord_positions(h, c)) {
            ThetaCertificate cert{c, Edge{std::min(c[i], c[j]), std::max(c[i], c[j])}};
            if (auto w = well_placed_witness(t, cert)) {
              result.value = WellPlacedTheta{std::move(cert), std::move(*w)};
              return true;
            }
          }
          return false;
        },
        budget.max_steps, result.steps);
    if (!complete) {
      result.status = SearchStatus::BudgetExceeded;
      result.value.reset();
      return result;
    }
    if (result.value) {
      result.status = SearchStatus::Found;
      return result;
    }
  }
  result.status = SearchStatus::None;
  return result;
}

std::optional<std::size_t> girth(const Graph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> dist(g.order());
  std::vector<Vertex> parent(g.order());
  for (Vertex r = 0; r < g.order(); ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = r;
    std::deque<Vertex> queue{r};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (static_cast<std::size_t>(2 * dist[v] + 1) >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, static_cast<std::size_t>(dist[v] + dist[w] + 1));
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

}  // namespace evencycle
