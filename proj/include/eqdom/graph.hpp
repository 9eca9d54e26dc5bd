#pragma once

// Simple undirected graphs over dense ids 0..n-1 and the structural queries
// the recognizers are built from.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqdom/error.hpp"

namespace eqdom {

using vertex = std::uint32_t;
using vertex_set = std::vector<vertex>;  // always sorted ascending
using edge = std::pair<vertex, vertex>;

class graph {
public:
  graph() = default;

  // Validating constructor; see build_graph.
  graph(std::size_t n, std::span<const edge> edges) : adj_(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw error(errc::out_of_range,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n),
                    {u, v});
      if (u == v) throw error(errc::self_loop, "self-loop at " + std::to_string(u), {u});
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (vertex v = 0; v < n; ++v) {
      auto& nb = adj_[v];
      std::sort(nb.begin(), nb.end());
      auto dup = std::adjacent_find(nb.begin(), nb.end());
      if (dup != nb.end())
        throw error(errc::duplicate_edge,
                    "edge (" + std::to_string(v) + "," + std::to_string(*dup) + ") given twice", {v, *dup});
    }
    m_ = edges.size();
  }

  graph(std::size_t n, std::initializer_list<edge> edges)
      : graph(n, std::span<const edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }

  std::span<const vertex> neighbors(vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(vertex v) const noexcept { return adj_[v].size(); }

  bool adjacent(vertex u, vertex v) const noexcept {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::size_t min_degree() const noexcept {
    std::size_t d = adj_.empty() ? 0 : adj_[0].size();
    for (const auto& nb : adj_) d = std::min(d, nb.size());
    return d;
  }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& nb : adj_) d = std::max(d, nb.size());
    return d;
  }

  // Edges as (u,v) with u < v, lexicographically sorted.
  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(m_);
    for (vertex u = 0; u < adj_.size(); ++u)
      for (vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const graph&, const graph&) = default;

private:
  std::vector<std::vector<vertex>> adj_;
  std::size_t m_ = 0;
};

inline graph build_graph(std::size_t n, std::span<const edge> edges) { return graph(n, edges); }

// Subgraph induced by `keep` (sorted); vertex i of the result is keep[i].
inline graph induced_subgraph(const graph& g, const vertex_set& keep) {
  std::vector<vertex> index(g.order(), static_cast<vertex>(-1));
  for (vertex i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<edge> es;
  for (vertex i = 0; i < keep.size(); ++i)
    for (vertex w : g.neighbors(keep[i]))
      if (index[w] != static_cast<vertex>(-1) && i < index[w]) es.emplace_back(i, index[w]);
  return graph(keep.size(), es);
}

// g - v, with ids above v shifted down by one.
inline graph remove_vertex(const graph& g, vertex v) {
  vertex_set keep;
  keep.reserve(g.order());
  for (vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

inline bool contains(const vertex_set& s, vertex v) { return std::binary_search(s.begin(), s.end(), v); }

// Component label per vertex, labels assigned 0,1,.. in order of smallest member.
inline std::vector<std::uint32_t> components(const graph& g, std::size_t* count = nullptr) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(g.order(), unset);
  std::uint32_t next = 0;
  std::vector<vertex> stack;
  for (vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      vertex u = stack.back();
      stack.pop_back();
      for (vertex w : g.neighbors(u))
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const graph& g) {
  std::size_t count = 0;
  components(g, &count);
  return count <= 1;
}

inline bool is_tree(const graph& g) { return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g); }

struct bipartition {
  vertex_set side_a;  // |side_a| <= |side_b|
  vertex_set side_b;
  std::vector<char> in_a;  // indicator of side_a

  bool is_a(vertex v) const noexcept { return in_a[v] != 0; }

  friend bool operator==(const bipartition& x, const bipartition& y) {
    return x.side_a == y.side_a && x.side_b == y.side_b;
  }
};

// BFS 2-coloring with color[s] = 0 for the smallest vertex s of each
// component. Returns nullopt if an odd cycle exists.
inline std::optional<std::vector<char>> two_coloring(const graph& g) {
  std::vector<char> color(g.order(), -1);
  std::queue<vertex> q;
  for (vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      vertex u = q.front();
      q.pop();
      for (vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = static_cast<char>(1 - color[u]);
          q.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

// Smaller side first; on a tie side_a is the side holding vertex 0.
inline std::optional<bipartition> bipartition_of(const graph& g) {
  if (g.order() == 0) throw error(errc::too_small, "bipartition of the empty graph");
  if (!is_connected(g)) throw error(errc::disconnected, "bipartition requires a connected graph");
  auto color = two_coloring(g);
  if (!color) return std::nullopt;
  vertex_set zero, one;
  for (vertex v = 0; v < g.order(); ++v) ((*color)[v] == 0 ? zero : one).push_back(v);
  bipartition bp;
  if (one.size() < zero.size()) {
    bp.side_a = std::move(one);
    bp.side_b = std::move(zero);
  } else {
    bp.side_a = std::move(zero);
    bp.side_b = std::move(one);
  }
  bp.in_a.assign(g.order(), 0);
  for (vertex v : bp.side_a) bp.in_a[v] = 1;
  return bp;
}

struct structural_marks {
  vertex_set leaves;
  vertex_set supports;
  vertex_set weak_supports;
  std::vector<std::size_t> degrees;
  std::vector<std::uint32_t> leaf_neighbors;  // number of leaf neighbors per vertex

  bool is_leaf(vertex v) const noexcept { return degrees[v] == 1; }
  bool is_support(vertex v) const noexcept { return leaf_neighbors[v] > 0; }
  bool is_weak_support(vertex v) const noexcept { return leaf_neighbors[v] == 1; }
};

inline structural_marks marks_of(const graph& g) {
  structural_marks mk;
  const auto n = g.order();
  mk.degrees.resize(n);
  mk.leaf_neighbors.assign(n, 0);
  for (vertex v = 0; v < n; ++v) mk.degrees[v] = g.degree(v);
  for (vertex v = 0; v < n; ++v)
    if (mk.degrees[v] == 1) {
      mk.leaves.push_back(v);
      ++mk.leaf_neighbors[g.neighbors(v)[0]];
    }
  for (vertex v = 0; v < n; ++v) {
    if (mk.leaf_neighbors[v] > 0) mk.supports.push_back(v);
    if (mk.leaf_neighbors[v] == 1) mk.weak_supports.push_back(v);
  }
  return mk;
}

inline std::vector<std::size_t> bfs_distances(const graph& g, vertex source) {
  constexpr auto inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.order(), inf);
  std::queue<vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    vertex u = q.front();
    q.pop();
    for (vertex w : g.neighbors(u))
      if (dist[w] == inf) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// nullopt when v is unreachable from u.
inline std::optional<std::size_t> distance(const graph& g, vertex u, vertex v) {
  if (u >= g.order() || v >= g.order()) throw error(errc::out_of_range, "distance query outside the graph");
  if (u == v) return 0;
  auto d = bfs_distances(g, u)[v];
  if (d == static_cast<std::size_t>(-1)) return std::nullopt;
  return d;
}

// Every vertex is a leaf or adjacent to exactly one leaf.
inline bool is_corona(const graph& g) {
  if (g.order() < 2) return false;
  auto mk = marks_of(g);
  for (vertex v = 0; v < g.order(); ++v)
    if (!mk.is_leaf(v) && !mk.is_weak_support(v)) return false;
  return true;
}

inline bool is_cycle4(const graph& g) {
  if (g.order() != 4) return false;
  for (vertex v = 0; v < 4; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

// The standard families, labeled along the natural order.
inline graph path_graph(std::size_t n) {
  std::vector<edge> es;
  for (vertex i = 1; i < n; ++i) es.emplace_back(i - 1, i);
  return graph(n, es);
}

inline graph cycle_graph(std::size_t n) {
  std::vector<edge> es;
  for (vertex i = 1; i < n; ++i) es.emplace_back(i - 1, i);
  if (n >= 3) es.emplace_back(0, static_cast<vertex>(n - 1));
  return graph(n, es);
}

inline graph complete_graph(std::size_t n) {
  std::vector<edge> es;
  for (vertex i = 0; i < n; ++i)
    for (vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return graph(n, es);
}

// Side of size p is 0..p-1, side of size q is p..p+q-1.
inline graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  std::vector<edge> es;
  for (vertex i = 0; i < p; ++i)
    for (vertex j = 0; j < q; ++j) es.emplace_back(i, static_cast<vertex>(p + j));
  return graph(p + q, es);
}

inline graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

}  // namespace eqdom
