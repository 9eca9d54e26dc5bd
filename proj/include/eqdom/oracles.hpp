#pragma once

// Exact exponential-time domination, covering and independence numbers.
//
// All three searches walk candidate sets as ascending id sequences in
// lexicographic pre-order and only replace the incumbent on a strict
// improvement, so the witness returned is the lexicographically smallest
// optimal set.

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "eqdom/error.hpp"
#include "eqdom/graph.hpp"

namespace eqdom {

struct oracle_result {
  std::size_t value = 0;
  vertex_set witness;
  std::uint64_t explored = 0;  // search nodes visited
};

inline constexpr std::size_t default_oracle_cap = 24;
inline constexpr std::size_t max_oracle_cap = 64;

struct oracle_options {
  std::size_t cap = default_oracle_cap;
};

inline bool is_dominating(const graph& g, const vertex_set& d) {
  std::vector<char> hit(g.order(), 0);
  for (vertex v : d) {
    hit[v] = 1;
    for (vertex w : g.neighbors(v)) hit[w] = 1;
  }
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

inline bool is_vertex_cover(const graph& g, const vertex_set& c) {
  for (auto [u, v] : g.edges())
    if (!contains(c, u) && !contains(c, v)) return false;
  return true;
}

inline bool is_independent(const graph& g, const vertex_set& s) {
  for (vertex v : s)
    for (vertex w : g.neighbors(v))
      if (contains(s, w)) return false;
  return true;
}

namespace detail {

using mask = std::uint64_t;

inline mask bit(vertex v) { return mask{1} << v; }

// Bits strictly below position i cleared.
inline mask from(std::size_t i) { return i >= 64 ? 0 : ~mask{0} << i; }

inline int highest(mask m) { return 63 - std::countl_zero(m); }

struct bit_graph {
  std::size_t n = 0;
  std::vector<mask> open, closed;
  mask full = 0;
};

inline void check_cap(const graph& g, const oracle_options& opt) {
  const auto cap = std::min(opt.cap, max_oracle_cap);
  if (g.order() > cap)
    throw error(errc::size_cap_exceeded,
                "graph has " + std::to_string(g.order()) + " vertices, oracle cap is " + std::to_string(cap));
}

inline bit_graph to_bits(const graph& g) {
  bit_graph b;
  b.n = g.order();
  b.open.assign(b.n, 0);
  b.closed.assign(b.n, 0);
  for (vertex v = 0; v < b.n; ++v) {
    for (vertex w : g.neighbors(v)) b.open[v] |= bit(w);
    b.closed[v] = b.open[v] | bit(v);
  }
  b.full = b.n == 64 ? ~mask{0} : (mask{1} << b.n) - 1;
  return b;
}

inline vertex_set to_set(mask m) {
  vertex_set s;
  while (m) {
    s.push_back(static_cast<vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

class dominating_search {
public:
  explicit dominating_search(const bit_graph& g) : g_(g), suffix_(g.n + 1, 0) {
    for (std::size_t i = g.n; i-- > 0;) suffix_[i] = suffix_[i + 1] | g.closed[i];
  }

  oracle_result run() {
    best_ = greedy_bound() + 1;
    dfs(0, 0, 0, 0);
    return {best_, to_set(best_set_), explored_};
  }

private:
  std::size_t greedy_bound() const {
    mask dominated = 0;
    std::size_t count = 0;
    while (dominated != g_.full) {
      int pick = -1, gain = -1;
      for (std::size_t v = 0; v < g_.n; ++v) {
        int c = std::popcount(g_.closed[v] & ~dominated);
        if (c > gain) gain = c, pick = static_cast<int>(v);
      }
      dominated |= g_.closed[pick];
      ++count;
    }
    return count;
  }

  void dfs(std::size_t next, mask dominated, mask chosen, std::size_t depth) {
    ++explored_;
    if (dominated == g_.full) {
      if (depth < best_) best_ = depth, best_set_ = chosen;
      return;
    }
    if (depth + 1 >= best_) return;
    const mask open_ = g_.full & ~dominated;
    if (open_ & ~suffix_[next]) return;

    // The smallest remaining choice must not skip past every dominator of
    // the most constrained undominated vertex.
    int limit = static_cast<int>(g_.n) - 1;
    for (mask m = open_; m; m &= m - 1) {
      auto u = std::countr_zero(m);
      limit = std::min(limit, highest(g_.closed[u] & from(next)));
    }
    int max_gain = 0;
    for (std::size_t c = next; c < g_.n; ++c) max_gain = std::max(max_gain, std::popcount(g_.closed[c] & open_));
    const auto need = (static_cast<std::size_t>(std::popcount(open_)) + max_gain - 1) / max_gain;
    if (depth + need >= best_) return;

    for (int c = static_cast<int>(next); c <= limit; ++c)
      dfs(static_cast<std::size_t>(c) + 1, dominated | g_.closed[c], chosen | bit(c), depth + 1);
  }

  const bit_graph& g_;
  std::vector<mask> suffix_;
  std::size_t best_ = 0;
  mask best_set_ = 0;
  std::uint64_t explored_ = 0;
};

class cover_search {
public:
  explicit cover_search(const bit_graph& g) : g_(g) {}

  oracle_result run() {
    best_ = g_.n + 1;
    dfs(0, 0, 0);
    return {best_, to_set(best_set_), explored_};
  }

private:
  void dfs(std::size_t next, mask chosen, std::size_t depth) {
    ++explored_;
    int limit = std::numeric_limits<int>::max();
    std::size_t matching = 0;
    mask matched = chosen;
    bool any = false;
    for (std::size_t u = 0; u < g_.n; ++u) {
      if (chosen & bit(static_cast<vertex>(u))) continue;
      mask rest = g_.open[u] & ~chosen & from(u + 1);
      if (!rest) continue;
      any = true;
      // Uncovered edge (u, w) with u < w: needs u or w among later picks.
      int w = std::countr_zero(rest);
      if (static_cast<std::size_t>(w) < next) return;
      limit = std::min(limit, w);
      if (!(matched & bit(static_cast<vertex>(u)))) {
        mask free = rest & ~matched;
        if (free) {
          matched |= bit(static_cast<vertex>(u)) | (free & -free);
          ++matching;
        }
      }
    }
    if (!any) {
      if (depth < best_) best_ = depth, best_set_ = chosen;
      return;
    }
    if (depth + matching >= best_) return;
    for (int c = static_cast<int>(next); c <= limit; ++c)
      dfs(static_cast<std::size_t>(c) + 1, chosen | bit(c), depth + 1);
  }

  const bit_graph& g_;
  std::size_t best_ = 0;
  mask best_set_ = 0;
  std::uint64_t explored_ = 0;
};

class independent_search {
public:
  explicit independent_search(const bit_graph& g) : g_(g) {}

  oracle_result run() {
    dfs(0, g_.full, 0);
    return {static_cast<std::size_t>(best_), to_set(best_set_), explored_};
  }

private:
  // Upper bound on an independent subset of p: greedy clique cover.
  int clique_cover(mask p) const {
    int count = 0;
    while (p) {
      mask cand = p;
      while (cand) {
        auto w = std::countr_zero(cand);
        p &= ~bit(w);
        cand &= g_.open[w];
      }
      ++count;
    }
    return count;
  }

  void dfs(mask chosen, mask cand, int depth) {
    ++explored_;
    if (depth > best_) best_ = depth, best_set_ = chosen;
    while (cand) {
      if (depth + clique_cover(cand) <= best_) return;
      auto c = std::countr_zero(cand);
      cand &= ~bit(c);
      dfs(chosen | bit(c), cand & ~g_.open[c], depth + 1);
    }
  }

  const bit_graph& g_;
  int best_ = -1;
  mask best_set_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace detail

inline oracle_result gamma(const graph& g, const oracle_options& opt = {}) {
  detail::check_cap(g, opt);
  if (g.order() == 0) return {};
  auto bg = detail::to_bits(g);
  auto r = detail::dominating_search(bg).run();
  if (r.witness.size() != r.value || !is_dominating(g, r.witness))
    throw std::logic_error("gamma oracle produced an invalid witness");
  return r;
}

inline oracle_result beta(const graph& g, const oracle_options& opt = {}) {
  detail::check_cap(g, opt);
  auto bg = detail::to_bits(g);
  auto r = detail::cover_search(bg).run();
  if (r.witness.size() != r.value || !is_vertex_cover(g, r.witness))
    throw std::logic_error("beta oracle produced an invalid witness");
  return r;
}

inline oracle_result alpha(const graph& g, const oracle_options& opt = {}) {
  detail::check_cap(g, opt);
  auto bg = detail::to_bits(g);
  auto r = detail::independent_search(bg).run();
  if (r.witness.size() != r.value || !is_independent(g, r.witness))
    throw std::logic_error("alpha oracle produced an invalid witness");
  return r;
}

// N[x] - N[X - {x}]
inline vertex_set private_neighborhood(const graph& g, vertex x, const vertex_set& xs) {
  if (!contains(xs, x)) throw error(errc::x_not_in_set, "vertex " + std::to_string(x) + " is not in X", {x});
  std::vector<char> covered(g.order(), 0);
  for (vertex y : xs) {
    if (y == x) continue;
    covered[y] = 1;
    for (vertex w : g.neighbors(y)) covered[w] = 1;
  }
  vertex_set out;
  auto consider = [&](vertex w) {
    if (!covered[w]) out.push_back(w);
  };
  consider(x);
  for (vertex w : g.neighbors(x)) consider(w);
  std::sort(out.begin(), out.end());
  return out;
}

// gamma(g - v) < gamma(g), by deleting v and re-running the oracle.
inline bool is_gamma_minus_critical(const graph& g, vertex v, const oracle_options& opt = {}) {
  if (v >= g.order()) throw error(errc::out_of_range, "vertex " + std::to_string(v) + " not in graph", {v});
  const auto whole = gamma(g, opt).value;
  return gamma(remove_vertex(g, v), opt).value < whole;
}

}  // namespace eqdom
