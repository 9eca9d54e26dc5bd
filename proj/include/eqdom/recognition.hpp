#pragma once

// Polynomial recognizers for graphs with equal domination and covering
// numbers, and for bipartite graphs whose domination number equals the
// smaller partite set.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "eqdom/error.hpp"
#include "eqdom/graph.hpp"
#include "eqdom/oracles.hpp"

namespace eqdom {

enum class condition {
  independent_support,   // (1) of the alpha-set characterization
  edge_outside_set,      // (2)
  pair_witnesses,        // (3)
  b_weak_support,        // (3a) of the bipartite characterization
  b_pair_witnesses,      // (3b)
  corona_or_c4,          // equal partite sets
  degree_bound,          // grid intersection graphs: at most 4 free neighbors
  reduced_not_bipartite, // support-support edges removed, odd cycle left
  support_side_conflict, // supports forced onto both sides of a component
};

constexpr std::string_view to_string(condition c) noexcept {
  switch (c) {
    case condition::independent_support: return "(1)";
    case condition::edge_outside_set: return "(2)";
    case condition::pair_witnesses: return "(3)";
    case condition::b_weak_support: return "(3a)";
    case condition::b_pair_witnesses: return "(3b)";
    case condition::corona_or_c4: return "corona/C4";
    case condition::degree_bound: return "degree-bound";
    case condition::reduced_not_bipartite: return "reduced-not-bipartite";
    case condition::support_side_conflict: return "support-side-conflict";
  }
  return "?";
}

struct witness_gamma_set {
  vertex_set vertices;
  friend bool operator==(const witness_gamma_set&, const witness_gamma_set&) = default;
};

struct violated_condition {
  condition which;
  vertex_set offending;
  friend bool operator==(const violated_condition&, const violated_condition&) = default;
};

using certificate = std::variant<witness_gamma_set, violated_condition>;

struct verdict {
  bool member = false;
  certificate cert;
  std::uint64_t pair_checks = 0;

  static verdict accept(vertex_set gamma_set, std::uint64_t checks = 0) {
    return {true, witness_gamma_set{std::move(gamma_set)}, checks};
  }
  static verdict reject(condition c, vertex_set offending, std::uint64_t checks = 0) {
    std::sort(offending.begin(), offending.end());
    return {false, violated_condition{c, std::move(offending)}, checks};
  }

  const vertex_set* witness() const {
    auto* w = std::get_if<witness_gamma_set>(&cert);
    return w ? &w->vertices : nullptr;
  }
  const violated_condition* violation() const { return std::get_if<violated_condition>(&cert); }
};

// Multiplicities of unordered pairs {x,y} of "free" vertices, counting the
// degree-2 vertices whose neighborhood is exactly {x,y}. Each pair also
// carries a verified flag used to skip re-examination.
class pair_multiplicity_map {
public:
  static constexpr std::size_t default_dense_limit = 4096;

  pair_multiplicity_map(const vertex_set& members, std::size_t n, std::size_t dense_limit = default_dense_limit)
      : index_(n, npos), k_(members.size()), dense_(members.size() <= dense_limit) {
    for (std::size_t i = 0; i < members.size(); ++i) index_[members[i]] = static_cast<std::uint32_t>(i);
    if (dense_) cells_.assign(k_ * (k_ > 0 ? k_ - 1 : 0) / 2, 0);
  }

  bool is_member(vertex v) const noexcept { return index_[v] != npos; }
  bool dense() const noexcept { return dense_; }

  void add(vertex x, vertex y) { ++raw(x, y); }

  std::uint32_t count(vertex x, vertex y) const { return peek(x, y) & count_mask; }

  bool verified(vertex x, vertex y) const { return (peek(x, y) & verified_bit) != 0; }
  void mark_verified(vertex x, vertex y) { raw(x, y) |= verified_bit; }

  std::size_t pairs_with_at_least(std::uint32_t t) const {
    std::size_t c = 0;
    if (dense_) {
      for (auto cell : cells_) c += (cell & count_mask) >= t;
    } else {
      for (const auto& [key, cell] : sparse_) c += (cell & count_mask) >= t;
    }
    return c;
  }

private:
  static constexpr std::uint32_t npos = static_cast<std::uint32_t>(-1);
  static constexpr std::uint32_t verified_bit = 0x80000000u;
  static constexpr std::uint32_t count_mask = 0x7fffffffu;

  std::pair<std::uint64_t, std::uint64_t> ordered(vertex x, vertex y) const {
    std::uint64_t i = index_[x], j = index_[y];
    if (i > j) std::swap(i, j);
    return {i, j};
  }

  std::size_t slot(std::uint64_t i, std::uint64_t j) const { return i * (2 * k_ - i - 1) / 2 + (j - i - 1); }

  std::uint32_t& raw(vertex x, vertex y) {
    auto [i, j] = ordered(x, y);
    if (dense_) return cells_[slot(i, j)];
    return sparse_[(i << 32) | j];
  }

  std::uint32_t peek(vertex x, vertex y) const {
    auto [i, j] = ordered(x, y);
    if (dense_) return cells_[slot(i, j)];
    auto it = sparse_.find((i << 32) | j);
    return it == sparse_.end() ? 0 : it->second;
  }

  std::vector<std::uint32_t> index_;
  std::size_t k_;
  bool dense_;
  std::vector<std::uint32_t> cells_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

namespace detail {

// For each vertex `w` on the witness side, every pair of its free neighbors
// needs at least two exclusive degree-2 witnesses. Returns the first failing
// pair, or nothing. `checks` counts every pair inspected.
template <class OnWitnessSide>
std::optional<edge> first_unwitnessed_pair(const graph& g, const vertex_set& free, OnWitnessSide on_witness_side,
                                           std::uint64_t& checks, std::size_t* positive_pairs = nullptr,
                                           std::size_t dense_limit = pair_multiplicity_map::default_dense_limit) {
  pair_multiplicity_map mult(free, g.order(), dense_limit);
  for (vertex w = 0; w < g.order(); ++w) {
    if (!on_witness_side(w) || g.degree(w) != 2) continue;
    auto nb = g.neighbors(w);
    if (mult.is_member(nb[0]) && mult.is_member(nb[1])) mult.add(nb[0], nb[1]);
  }
  if (positive_pairs) *positive_pairs = mult.pairs_with_at_least(2);
  std::vector<vertex> list;
  for (vertex w = 0; w < g.order(); ++w) {
    if (!on_witness_side(w)) continue;
    list.clear();
    for (vertex x : g.neighbors(w))
      if (mult.is_member(x)) list.push_back(x);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        ++checks;
        if (mult.verified(list[i], list[j])) continue;
        if (mult.count(list[i], list[j]) < 2) return edge{list[i], list[j]};
        mult.mark_verified(list[i], list[j]);
      }
  }
  return std::nullopt;
}

inline void require_connected(const graph& g) {
  if (g.order() < 2) throw error(errc::too_small, "at least two vertices required");
  if (!is_connected(g)) throw error(errc::disconnected, "graph is not connected");
}

inline vertex_set corona_offenders(const graph& g) {
  auto mk = marks_of(g);
  vertex_set bad;
  for (vertex v = 0; v < g.order(); ++v)
    if (!mk.is_leaf(v) && !mk.is_weak_support(v)) bad.push_back(v);
  return bad;
}

}  // namespace detail

// Checks the three alpha-set conditions for I against g; I must be a maximum
// independent set (verified with the exact oracle).
inline verdict check_cgb_conditions(const graph& g, vertex_set independent, const oracle_options& opt = {}) {
  detail::require_connected(g);
  std::sort(independent.begin(), independent.end());
  independent.erase(std::unique(independent.begin(), independent.end()), independent.end());
  for (vertex v : independent)
    if (v >= g.order()) throw error(errc::out_of_range, "vertex " + std::to_string(v) + " not in graph", {v});
  if (!is_independent(g, independent))
    throw error(errc::not_maximum_independent, "the given set is not independent");
  if (independent.size() != alpha(g, opt).value)
    throw error(errc::not_maximum_independent, "the given set is independent but not maximum");

  const auto mk = marks_of(g);
  std::vector<char> in_i(g.order(), 0);
  for (vertex v : independent) in_i[v] = 1;
  std::uint64_t checks = 0;

  for (vertex s : independent) {
    if (!mk.is_support(s)) continue;
    if (!mk.is_weak_support(s)) return verdict::reject(condition::independent_support, {s});
    for (vertex w : g.neighbors(s))
      if (!mk.is_leaf(w) && !mk.is_support(w)) return verdict::reject(condition::independent_support, {s, w});
  }
  for (auto [u, v] : g.edges())
    if (!in_i[u] && !in_i[v] && !(mk.is_support(u) && mk.is_support(v)))
      return verdict::reject(condition::edge_outside_set, {u, v});

  vertex_set rest;
  for (vertex v = 0; v < g.order(); ++v)
    if (!in_i[v] && !mk.is_leaf(v) && !mk.is_support(v)) rest.push_back(v);
  pair_multiplicity_map mult(rest, g.order());
  for (vertex z : independent) {
    if (g.degree(z) != 2) continue;
    auto nb = g.neighbors(z);
    if (mult.is_member(nb[0]) && mult.is_member(nb[1])) mult.add(nb[0], nb[1]);
  }
  // Pairs of `rest` at distance two are the non-adjacent pairs sharing a
  // neighbor; the witness vertices must lie in I.
  std::vector<vertex> list;
  for (vertex w = 0; w < g.order(); ++w) {
    list.clear();
    for (vertex x : g.neighbors(w))
      if (mult.is_member(x)) list.push_back(x);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        ++checks;
        if (g.adjacent(list[i], list[j]) || mult.verified(list[i], list[j])) continue;
        if (mult.count(list[i], list[j]) < 2) return verdict::reject(condition::pair_witnesses, {list[i], list[j]}, checks);
        mult.mark_verified(list[i], list[j]);
      }
  }

  vertex_set complement;
  for (vertex v = 0; v < g.order(); ++v)
    if (!in_i[v]) complement.push_back(v);
  return verdict::accept(std::move(complement), checks);
}

struct b_class_options {
  std::size_t dense_limit = pair_multiplicity_map::default_dense_limit;
  std::size_t* positive_pairs = nullptr;  // out: pairs with >= 2 exclusive witnesses
};

namespace detail {

// The two bipartite conditions: supports in B are weak with only supports
// as non-leaf neighbors, and every pair of free A-vertices with a common
// neighbor has two exclusive degree-2 common neighbors.
inline std::optional<verdict> violated_b_condition(const graph& g, const bipartition& bp, const b_class_options& opt,
                                                   std::uint64_t& checks) {
  const auto mk = marks_of(g);
  for (vertex b : bp.side_b) {
    if (!mk.is_support(b)) continue;
    if (!mk.is_weak_support(b)) return verdict::reject(condition::b_weak_support, {b});
    for (vertex w : g.neighbors(b))
      if (!mk.is_leaf(w) && !mk.is_support(w)) return verdict::reject(condition::b_weak_support, {b, w});
  }
  vertex_set free;
  for (vertex a : bp.side_a)
    if (!mk.is_leaf(a) && !mk.is_support(a)) free.push_back(a);
  auto on_b = [&](vertex w) { return !bp.is_a(w); };
  if (auto bad = first_unwitnessed_pair(g, free, on_b, checks, opt.positive_pairs, opt.dense_limit))
    return verdict::reject(condition::b_pair_witnesses, {bad->first, bad->second}, checks);
  return std::nullopt;
}

}  // namespace detail

// gamma(g) == |A| for a connected bipartite g, in O(n^2). With equal sides
// membership is the corona / C4 test; a rejection there still names a
// violated bipartite condition when one exists.
inline verdict recognize_b_class(const graph& g, const b_class_options& opt = {}) {
  detail::require_connected(g);
  auto bp = bipartition_of(g);
  if (!bp) throw error(errc::not_bipartite, "graph has an odd cycle");
  if (opt.positive_pairs) *opt.positive_pairs = 0;
  std::uint64_t checks = 0;

  if (bp->side_a.size() == bp->side_b.size()) {
    if (is_cycle4(g) || is_corona(g)) return verdict::accept(bp->side_a);
    if (auto v = detail::violated_b_condition(g, *bp, opt, checks)) return *v;
    return verdict::reject(condition::corona_or_c4, detail::corona_offenders(g), checks);
  }
  if (auto v = detail::violated_b_condition(g, *bp, opt, checks)) return *v;
  return verdict::accept(bp->side_a, checks);
}

// gamma(g) == beta(g) for a connected g without isolated vertices, in O(n^2).
//
// Supports and the endpoints of all support-support edges are set aside by
// passing to H = g minus those edges. A member graph splits as J | I with
// every support in J, every leaf in I, and (J, I) a proper 2-coloring of H;
// J is then both a minimum cover and a minimum dominating set exactly when
// each pair of non-support J-vertices with a common neighbor has two
// exclusive degree-2 common neighbors. Components of H with a support have
// forced orientation; a leafless g is tried both ways.
inline verdict recognize_cgb_poly(const graph& g) {
  if (g.order() >= 2)
    for (vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 0) throw error(errc::isolated_vertex, "vertex " + std::to_string(v) + " is isolated", {v});
  detail::require_connected(g);
  if (g.order() == 2) return verdict::accept({0});

  const auto mk = marks_of(g);
  std::vector<edge> kept;
  for (auto [u, v] : g.edges())
    if (!(mk.is_support(u) && mk.is_support(v))) kept.emplace_back(u, v);
  const graph h(g.order(), kept);

  auto color = two_coloring(h);
  if (!color) {
    // Report one monochromatic edge of a BFS layering as the culprit.
    auto comp = components(h);
    std::vector<std::size_t> depth(g.order(), 0);
    std::vector<char> seen(g.order(), 0);
    for (vertex s = 0; s < g.order(); ++s) {
      if (seen[s]) continue;
      auto d = bfs_distances(h, s);
      for (vertex v = 0; v < g.order(); ++v)
        if (comp[v] == comp[s]) seen[v] = 1, depth[v] = d[v];
    }
    for (auto [u, v] : kept)
      if (depth[u] % 2 == depth[v] % 2) return verdict::reject(condition::reduced_not_bipartite, {u, v});
    throw std::logic_error("odd cycle not located");
  }

  std::size_t comp_count = 0;
  auto comp = components(h, &comp_count);
  // flip[c] == 1 when the J side of component c is color 1.
  std::vector<int> flip(comp_count, -1);
  std::vector<vertex> first_support(comp_count, 0);
  for (vertex s : mk.supports) {
    auto c = comp[s];
    int want = (*color)[s];
    if (flip[c] == -1) {
      flip[c] = want;
      first_support[c] = s;
    } else if (flip[c] != want) {
      return verdict::reject(condition::support_side_conflict, {first_support[c], s});
    }
  }

  std::vector<std::vector<char>> orientations;
  auto orient = [&](int fallback) {
    std::vector<char> in_j(g.order(), 0);
    for (vertex v = 0; v < g.order(); ++v) {
      int f = flip[comp[v]] == -1 ? fallback : flip[comp[v]];
      in_j[v] = (*color)[v] == f;
    }
    return in_j;
  };
  if (mk.supports.empty()) {
    // Single component (g is connected and leafless). Smaller side first.
    auto zero = orient(0), one = orient(1);
    auto size0 = std::count(zero.begin(), zero.end(), 1);
    auto size1 = std::count(one.begin(), one.end(), 1);
    if (size1 < size0) std::swap(zero, one);
    orientations.push_back(std::move(zero));
    orientations.push_back(std::move(one));
  } else {
    orientations.push_back(orient(0));
  }

  std::uint64_t checks = 0;
  std::optional<edge> first_failure;
  for (const auto& in_j : orientations) {
    vertex_set free;
    for (vertex v = 0; v < g.order(); ++v)
      if (in_j[v] && !mk.is_support(v)) free.push_back(v);
    auto on_i = [&](vertex w) { return in_j[w] == 0; };
    auto bad = detail::first_unwitnessed_pair(g, free, on_i, checks);
    if (!bad) {
      vertex_set j;
      for (vertex v = 0; v < g.order(); ++v)
        if (in_j[v]) j.push_back(v);
      return verdict::accept(std::move(j), checks);
    }
    if (!first_failure) first_failure = bad;
  }
  return verdict::reject(condition::pair_witnesses, {first_failure->first, first_failure->second}, checks);
}

// Size of the A side of the worst-case family for order n.
inline std::size_t worstcase_side(std::size_t n) {
  std::size_t p = 0;
  while (4 * (p + 1) * (p + 1) <= n) ++p;
  return p;
}

// Join of the doubled complete multigraph on p vertices with n - p^2
// independent vertices, every double edge subdivided once. Labels: the p
// originals, then two subdivision vertices per pair (pairs in lex order),
// then the independent vertices.
inline graph gen_worstcase(std::size_t n) {
  if (n < 16) throw error(errc::too_small, "worst-case family needs n >= 16, got " + std::to_string(n));
  const auto p = worstcase_side(n);
  std::vector<edge> es;
  auto next = static_cast<vertex>(p);
  for (vertex i = 0; i < p; ++i)
    for (vertex j = i + 1; j < p; ++j)
      for (int copy = 0; copy < 2; ++copy) {
        es.emplace_back(i, next);
        es.emplace_back(j, next);
        ++next;
      }
  const auto independent = n - p * p;
  for (std::size_t k = 0; k < independent; ++k, ++next)
    for (vertex i = 0; i < p; ++i) es.emplace_back(i, next);
  if (next != n) throw std::logic_error("worst-case family has the wrong order");
  return graph(n, es);
}

}  // namespace eqdom
