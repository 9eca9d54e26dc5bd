#pragma once

// Independent reference implementations for the test suites: exhaustive
// subset search, graph and tree enumeration, naive segment intersection and
// random grid generators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "eqdom/graph.hpp"
#include "eqdom/grid.hpp"

namespace bf {

using eqdom::edge;
using eqdom::graph;
using eqdom::vertex;
using eqdom::vertex_set;
using mask = std::uint64_t;

inline std::vector<mask> closed_masks(const graph& g) {
  std::vector<mask> nb(g.order());
  for (vertex v = 0; v < g.order(); ++v) {
    nb[v] = mask{1} << v;
    for (vertex w : g.neighbors(v)) nb[v] |= mask{1} << w;
  }
  return nb;
}

inline vertex_set to_set(mask m) {
  vertex_set s;
  for (vertex v = 0; m; ++v, m >>= 1)
    if (m & 1) s.push_back(v);
  return s;
}

inline bool dominates(const std::vector<mask>& nb, mask s, mask full) {
  mask hit = 0;
  for (mask m = s; m; m &= m - 1) hit |= nb[std::countr_zero(m)];
  return hit == full;
}

inline bool covers(const graph& g, mask s) {
  for (auto [u, v] : g.edges())
    if (!((s >> u) & 1) && !((s >> v) & 1)) return false;
  return true;
}

inline bool independent(const graph& g, mask s) {
  for (auto [u, v] : g.edges())
    if (((s >> u) & 1) && ((s >> v) & 1)) return false;
  return true;
}

inline std::size_t brute_gamma(const graph& g) {
  const auto n = g.order();
  const auto nb = closed_masks(g);
  const mask full = n == 64 ? ~mask{0} : (mask{1} << n) - 1;
  std::size_t best = n;
  for (mask m = 0; m <= full; ++m)
    if (static_cast<std::size_t>(std::popcount(m)) < best && dominates(nb, m, full)) best = std::popcount(m);
  return best;
}

inline std::size_t brute_beta(const graph& g) {
  std::size_t best = g.order();
  for (mask m = 0; m < (mask{1} << g.order()); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) < best && covers(g, m)) best = std::popcount(m);
  return best;
}

inline std::size_t brute_alpha(const graph& g) {
  std::size_t best = 0;
  for (mask m = 0; m < (mask{1} << g.order()); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) > best && independent(g, m)) best = std::popcount(m);
  return best;
}

inline std::vector<vertex_set> all_min_dominating_sets(const graph& g) {
  const auto n = g.order();
  const auto nb = closed_masks(g);
  const mask full = (mask{1} << n) - 1;
  const auto k = brute_gamma(g);
  std::vector<vertex_set> out;
  for (mask m = 0; m <= full; ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == k && dominates(nb, m, full)) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<vertex_set> all_max_independent_sets(const graph& g) {
  const auto k = brute_alpha(g);
  std::vector<vertex_set> out;
  for (mask m = 0; m < (mask{1} << g.order()); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == k && independent(g, m)) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool connected_edge_mask(std::size_t n, const std::vector<edge>& pairs, std::uint32_t em) {
  if (n <= 1) return true;
  std::vector<mask> nb(n, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((em >> i) & 1) {
      nb[pairs[i].first] |= mask{1} << pairs[i].second;
      nb[pairs[i].second] |= mask{1} << pairs[i].first;
    }
  mask seen = 1, frontier = 1;
  while (frontier) {
    mask next = 0;
    for (mask m = frontier; m; m &= m - 1) next |= nb[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (mask{1} << n) - 1;
}

// All connected labeled graphs on n vertices, as edge subsets of K_n.
inline void for_each_connected_graph(std::size_t n, const std::function<void(const graph&)>& f) {
  std::vector<edge> pairs;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<edge> es;
  for (std::uint32_t em = 0; em < (std::uint32_t{1} << pairs.size()); ++em) {
    if (std::popcount(em) + 1 < static_cast<int>(n) || !connected_edge_mask(n, pairs, em)) continue;
    es.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((em >> i) & 1) es.push_back(pairs[i]);
    f(graph(n, es));
  }
}

inline graph tree_from_pruefer(const std::vector<vertex>& seq) {
  const auto n = seq.size() + 2;
  std::vector<std::size_t> deg(n, 1);
  for (vertex v : seq) ++deg[v];
  std::vector<edge> es;
  for (vertex v : seq) {
    vertex leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    es.emplace_back(leaf, v);
    --deg[leaf];
    --deg[v];
  }
  vertex u = 0;
  while (deg[u] != 1) ++u;
  vertex w = u + 1;
  while (deg[w] != 1) ++w;
  es.emplace_back(u, w);
  return graph(n, es);
}

// All n^(n-2) labeled trees on n >= 2 vertices.
inline void for_each_labeled_tree(std::size_t n, const std::function<void(const graph&)>& f) {
  if (n == 2) {
    f(graph(2, {{0, 1}}));
    return;
  }
  std::vector<vertex> seq(n - 2, 0);
  while (true) {
    f(tree_from_pruefer(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

inline std::vector<edge> naive_intersections(const std::vector<eqdom::segment>& segs) {
  std::vector<edge> out;
  for (vertex i = 0; i < segs.size(); ++i)
    for (vertex j = i + 1; j < segs.size(); ++j)
      if (segs[i].dir != segs[j].dir && eqdom::segments_intersect(segs[i], segs[j])) out.emplace_back(i, j);
  return out;
}

// Grows a connected grid on a small integer lattice: each new segment is
// perpendicular to an existing one through a lattice point on it and avoids
// touching any collinear segment.
inline std::vector<eqdom::segment> random_grid(std::size_t n, std::mt19937_64& rng, std::int64_t extent = 12) {
  using eqdom::segment;
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::vector<segment> segs;
  segs.push_back(uni(0, 1) ? eqdom::vertical(uni(0, extent), 0, extent) : eqdom::horizontal(uni(0, extent), 0, extent));
  segs.back().lo = uni(0, extent / 2);
  segs.back().hi = uni(segs.back().lo + 1, extent);
  for (int attempts = 0; segs.size() < n && attempts < 200 * static_cast<int>(n); ++attempts) {
    const auto& base = segs[std::uniform_int_distribution<std::size_t>(0, segs.size() - 1)(rng)];
    const auto at = uni(base.lo, base.hi);
    std::int64_t lo = uni(std::max<std::int64_t>(0, base.fixed - extent / 2), base.fixed);
    std::int64_t hi = uni(base.fixed, std::min(extent, base.fixed + extent / 2));
    if (lo == hi) {
      if (hi < extent) ++hi;
      else --lo;
    }
    segment s = base.vertical() ? eqdom::horizontal(at, lo, hi) : eqdom::vertical(at, lo, hi);
    bool ok = true;
    for (const auto& t : segs)
      if (t.dir == s.dir && t.fixed == s.fixed && t.lo <= s.hi && s.lo <= t.hi) ok = false;
    if (ok) segs.push_back(s);
  }
  std::shuffle(segs.begin(), segs.end(), rng);
  return segs;
}

// Columns of verticals at x = 0, 2, 4, ... with random vertical extents,
// joined by horizontals at distinct heights between random columns. With
// `doubled`, most rungs come with a twin at another height.
inline std::vector<eqdom::segment> random_ladder(std::size_t columns, std::size_t rungs, bool doubled, std::mt19937_64& rng,
                                                 std::int64_t height = 40) {
  using eqdom::segment;
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::vector<segment> segs;
  for (std::size_t c = 0; c < columns; ++c) {
    auto lo = uni(0, height / 3), hi = uni(2 * height / 3, height);
    segs.push_back(eqdom::vertical(static_cast<std::int64_t>(2 * c), lo, hi));
  }
  std::vector<std::int64_t> heights;
  for (std::int64_t y = 0; y <= height; ++y) heights.push_back(y);
  std::shuffle(heights.begin(), heights.end(), rng);
  std::size_t next = 0;
  for (std::size_t r = 0; r < rungs && next < heights.size(); ++r) {
    auto i = uni(0, static_cast<std::int64_t>(columns) - 1);
    auto span = uni(1, 3) == 1 ? uni(1, 3) : 1;
    auto j = std::min<std::int64_t>(i + span, static_cast<std::int64_t>(columns) - 1);
    if (i == j) i = std::max<std::int64_t>(0, j - 1);
    if (i == j) continue;
    const int copies = doubled && uni(0, 4) != 0 ? 2 : 1;
    for (int k = 0; k < copies && next < heights.size(); ++k)
      segs.push_back(eqdom::horizontal(heights[next++], 2 * i, 2 * j));
  }
  std::shuffle(segs.begin(), segs.end(), rng);
  return segs;
}

// Verticals at x = 0, 2, 4, ... with staggered extents and a few long
// horizontals, then for every pair of verticals sharing a horizontal an
// exclusive two-ended rung is added where one fits. Aimed at grids where
// every two verticals with a common neighbor have a private degree-2 link.
inline std::vector<eqdom::segment> rung_completed_grid(std::size_t columns, std::size_t long_rows, std::mt19937_64& rng,
                                                       std::int64_t height = 24) {
  using eqdom::segment;
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::vector<segment> segs;
  for (std::size_t c = 0; c < columns; ++c)
    segs.push_back(eqdom::vertical(static_cast<std::int64_t>(2 * c), uni(0, height / 2 - 1), uni(height / 2 + 1, height)));
  auto free_row = [&](const segment& h) {
    for (const auto& t : segs)
      if (!t.vertical() && t.fixed == h.fixed && t.lo <= h.hi && h.lo <= t.hi) return false;
    return true;
  };
  auto hits = [&](const segment& h) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < columns; ++i)
      if (eqdom::segments_intersect(h, segs[i])) out.push_back(i);
    return out;
  };
  // Two rungs between neighboring columns keep the union connected and leafless.
  for (std::size_t c = 0; c + 1 < columns; ++c)
    for (int copy = 0; copy < 2; ++copy)
      for (int attempt = 0; attempt < 8; ++attempt) {
        segment h = eqdom::horizontal(uni(height / 2 - 1, height / 2 + 1) + (copy ? 0 : uni(-height / 4, height / 4)),
                                      static_cast<std::int64_t>(2 * c), static_cast<std::int64_t>(2 * c + 2));
        if (hits(h).size() == 2 && free_row(h)) {
          segs.push_back(h);
          break;
        }
      }
  for (std::size_t r = 0; r < long_rows; ++r) {
    auto i = uni(0, static_cast<std::int64_t>(columns) - 2);
    auto j = uni(i + 1, std::min<std::int64_t>(i + 4, static_cast<std::int64_t>(columns) - 1));
    segment h = eqdom::horizontal(uni(0, height), 2 * i, 2 * j);
    if (free_row(h)) segs.push_back(h);
  }
  std::vector<std::vector<char>> linked(columns, std::vector<char>(columns, 0));
  for (std::size_t k = columns; k < segs.size(); ++k) {
    const auto nb = hits(segs[k]);
    if (nb.size() == 2) linked[nb[0]][nb[1]] = 1;
  }
  for (std::size_t k = columns; k < segs.size(); ++k) {
    const auto nb = hits(segs[k]);
    for (std::size_t p = 0; p < nb.size(); ++p)
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        auto i = nb[p], j = nb[q];
        if (linked[i][j]) continue;
        for (std::int64_t y = 0; y <= height && !linked[i][j]; ++y) {
          segment h = eqdom::horizontal(y, static_cast<std::int64_t>(2 * i), static_cast<std::int64_t>(2 * j));
          auto through = hits(h);
          if (through.size() == 2 && through[0] == i && through[1] == j && free_row(h)) {
            segs.push_back(h);
            linked[i][j] = 1;
          }
        }
      }
  }
  std::shuffle(segs.begin(), segs.end(), rng);
  return segs;
}

}  // namespace bf
