#pragma once

// Grids of axis-parallel closed segments, their intersection graphs, and
// the extremal guard cover decision.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "eqdom/error.hpp"
#include "eqdom/graph.hpp"
#include "eqdom/oracles.hpp"
#include "eqdom/recognition.hpp"

namespace eqdom {

enum class orientation : std::uint8_t { horizontal, vertical };

// Coordinates are exact integers (decimal input scaled by a common power
// of ten). `fixed` is the y of a horizontal or the x of a vertical; the
// segment spans [lo, hi] along the other axis with lo < hi.
struct segment {
  orientation dir;
  std::int64_t fixed;
  std::int64_t lo;
  std::int64_t hi;

  bool vertical() const noexcept { return dir == orientation::vertical; }
  friend auto operator<=>(const segment&, const segment&) = default;
};

inline segment horizontal(std::int64_t y, std::int64_t x1, std::int64_t x2) {
  return {orientation::horizontal, y, std::min(x1, x2), std::max(x1, x2)};
}

inline segment vertical(std::int64_t x, std::int64_t y1, std::int64_t y2) {
  return {orientation::vertical, x, std::min(y1, y2), std::max(y1, y2)};
}

// Closed-segment intersection test.
inline bool segments_intersect(const segment& s, const segment& t) {
  if (s.dir == t.dir) return s.fixed == t.fixed && s.lo <= t.hi && t.lo <= s.hi;
  const segment& h = s.vertical() ? t : s;
  const segment& v = s.vertical() ? s : t;
  return h.lo <= v.fixed && v.fixed <= h.hi && v.lo <= h.fixed && h.fixed <= v.hi;
}

struct sweep_stats {
  std::uint64_t queries = 0;   // vertical range queries issued
  std::uint64_t reported = 0;  // edges reported
  std::uint64_t scanned = 0;   // active entries visited by range scans
  std::uint64_t log_work = 0;  // sum of ceil(log2(active + 1)) over queries
};

// Perpendicular intersections by a left-to-right sweep. At one x, horizontal
// starts precede vertical queries, which precede horizontal ends, so touching
// endpoints intersect. Pairs come back as (min, max), sorted.
inline std::vector<edge> sweep_intersections(std::span<const segment> segs, sweep_stats* stats = nullptr) {
  enum : int { start = 0, query = 1, finish = 2 };
  struct event {
    std::int64_t x;
    int kind;
    std::int64_t tie;
    vertex id;
    auto key() const { return std::tie(x, kind, tie, id); }
  };
  std::vector<event> events;
  events.reserve(2 * segs.size());
  for (vertex i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (s.vertical()) {
      events.push_back({s.fixed, query, s.lo, i});
    } else {
      events.push_back({s.lo, start, s.fixed, i});
      events.push_back({s.hi, finish, s.fixed, i});
    }
  }
  std::sort(events.begin(), events.end(), [](const event& a, const event& b) { return a.key() < b.key(); });

  sweep_stats local;
  std::set<std::pair<std::int64_t, vertex>> active;
  std::vector<edge> out;
  for (const auto& e : events) {
    const auto& s = segs[e.id];
    switch (e.kind) {
      case start: active.emplace(s.fixed, e.id); break;
      case finish: active.erase({s.fixed, e.id}); break;
      case query: {
        ++local.queries;
        local.log_work += std::bit_width(active.size());
        for (auto it = active.lower_bound({s.lo, 0}); it != active.end() && it->first <= s.hi; ++it) {
          ++local.scanned;
          out.emplace_back(std::min(e.id, it->second), std::max(e.id, it->second));
        }
        break;
      }
    }
  }
  local.reported = out.size();
  std::sort(out.begin(), out.end());
  if (stats) *stats = local;
  return out;
}

struct grid {
  std::vector<segment> segments;
  vertex_set vertical_ids;
  vertex_set horizontal_ids;
};

// Validates the grid conditions: at least two segments, no degenerate or
// repeated segment, collinear segments disjoint, connected union.
inline grid validate_grid(std::vector<segment> segs) {
  if (segs.size() < 2) throw error(errc::too_few_segments, "a grid needs at least two segments");
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (segs[i].lo >= segs[i].hi) throw error(errc::degenerate_segment, "segment " + std::to_string(i) + " has zero length", {i});

  std::vector<std::size_t> order(segs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(segs[a], a) < std::tie(segs[b], b);
  });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (segs[order[k]] == segs[order[k - 1]])
      throw error(errc::duplicate_segment, "segments " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]) + " coincide",
                  {std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k])});
  // Within one line, sorted by lo: overlap iff some earlier hi reaches lo.
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& prev = segs[order[k - 1]];
    const auto& cur = segs[order[k]];
    if (prev.dir == cur.dir && prev.fixed == cur.fixed && cur.lo <= prev.hi)
      throw error(errc::collinear_overlap, "collinear segments " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]) + " meet",
                  {std::min(order[k - 1], order[k]), std::max(order[k - 1], order[k])});
  }

  grid gr;
  gr.segments = std::move(segs);
  for (vertex i = 0; i < gr.segments.size(); ++i) (gr.segments[i].vertical() ? gr.vertical_ids : gr.horizontal_ids).push_back(i);

  const graph g(gr.segments.size(), sweep_intersections(gr.segments));
  auto comp = components(g);
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (comp[i] != 0) throw error(errc::disconnected_union, "segment " + std::to_string(i) + " is not connected to segment 0", {i});
  return gr;
}

struct grid_graph {
  graph g;
  vertex_set side_a;  // the smaller of verticals / horizontals; verticals on a tie
  vertex_set side_b;
  bool a_is_vertical = true;
  sweep_stats stats;
};

inline grid_graph intersection_graph(const grid& gr) {
  grid_graph out;
  out.g = graph(gr.segments.size(), sweep_intersections(gr.segments, &out.stats));
  out.a_is_vertical = gr.vertical_ids.size() <= gr.horizontal_ids.size();
  out.side_a = out.a_is_vertical ? gr.vertical_ids : gr.horizontal_ids;
  out.side_b = out.a_is_vertical ? gr.horizontal_ids : gr.vertical_ids;
  return out;
}

// Whether the grid needs min(|V|, |H|) mobile guards. Runs the bipartite
// test with the grid-only stop: a B-vertex with five or more free A
// neighbors rules the grid out, after which every free-pair list has at
// most four entries and is matched against the sorted pair list.
inline verdict is_extremal(const grid_graph& gg) {
  const auto& g = gg.g;
  if (gg.side_a.size() == gg.side_b.size()) {
    if (is_cycle4(g) || is_corona(g)) return verdict::accept(gg.side_a);
    bipartition bp{gg.side_a, gg.side_b, std::vector<char>(g.order(), 0)};
    for (vertex a : gg.side_a) bp.in_a[a] = 1;
    std::uint64_t checks = 0;
    if (auto v = detail::violated_b_condition(g, bp, {}, checks)) return *v;
    return verdict::reject(condition::corona_or_c4, detail::corona_offenders(g), checks);
  }
  const auto mk = marks_of(g);
  for (vertex b : gg.side_b) {
    if (!mk.is_support(b)) continue;
    if (!mk.is_weak_support(b)) return verdict::reject(condition::b_weak_support, {b});
    for (vertex w : g.neighbors(b))
      if (!mk.is_leaf(w) && !mk.is_support(w)) return verdict::reject(condition::b_weak_support, {b, w});
  }
  auto is_free = [&](vertex v) { return !mk.is_leaf(v) && !mk.is_support(v); };

  std::vector<std::vector<vertex>> free_nb(g.order());
  for (vertex b : gg.side_b) {
    for (vertex a : g.neighbors(b))
      if (is_free(a)) free_nb[b].push_back(a);
    if (free_nb[b].size() >= 5) {
      vertex_set culprit{b};
      culprit.insert(culprit.end(), free_nb[b].begin(), free_nb[b].end());
      return verdict::reject(condition::degree_bound, culprit);
    }
  }

  std::vector<edge> pairs;
  for (vertex b : gg.side_b)
    if (g.degree(b) == 2 && free_nb[b].size() == 2) pairs.emplace_back(free_nb[b][0], free_nb[b][1]);
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    if (j - i == 1) return verdict::reject(condition::b_pair_witnesses, {pairs[i].first, pairs[i].second});
    i = j;
  }
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::uint64_t checks = 0;
  for (vertex b : gg.side_b) {
    const auto& l = free_nb[b];
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        ++checks;
        if (!std::binary_search(pairs.begin(), pairs.end(), edge{l[i], l[j]}))
          return verdict::reject(condition::b_pair_witnesses, {l[i], l[j]}, checks);
      }
  }
  return verdict::accept(gg.side_a, checks);
}

inline verdict is_extremal(const grid& gr) { return is_extremal(intersection_graph(gr)); }

// A minimum patrolling set is a minimum dominating set of the intersection graph.
inline oracle_result min_patrolling_set(const grid& gr, const oracle_options& opt = {}) {
  return gamma(intersection_graph(gr).g, opt);
}

}  // namespace eqdom
