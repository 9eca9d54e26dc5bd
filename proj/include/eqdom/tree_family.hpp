#pragma once

// Trees whose domination number equals the smaller partite set: linear
// domination DP, the four growth operations, random generation and the
// reduction that recovers a build script from a member tree.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eqdom/error.hpp"
#include "eqdom/graph.hpp"
#include "eqdom/oracles.hpp"
#include "eqdom/recognition.hpp"

namespace eqdom {

// A tree rooted at vertex 0 together with its partite sides. Sides are
// carried explicitly so that trees grown by the operations keep the
// sides they were built with.
class rooted_tree_view {
public:
  explicit rooted_tree_view(graph t) : g_(std::move(t)) {
    if (!is_tree(g_)) throw error(errc::not_a_tree, "graph is not a tree");
    auto bp = bipartition_of(g_);
    in_a_ = bp->in_a;
    init();
  }

  const graph& tree() const noexcept { return g_; }
  std::size_t order() const noexcept { return g_.order(); }
  vertex parent(vertex v) const noexcept { return parent_[v]; }
  // Vertices in BFS order from the root; parents precede children.
  const std::vector<vertex>& order_from_root() const noexcept { return bfs_; }

  bool in_a(vertex v) const noexcept { return in_a_[v] != 0; }
  const vertex_set& side_a() const noexcept { return side_a_; }
  const vertex_set& side_b() const noexcept { return side_b_; }

  friend bool operator==(const rooted_tree_view& x, const rooted_tree_view& y) {
    return x.g_ == y.g_ && x.in_a_ == y.in_a_;
  }

private:
  friend rooted_tree_view with_sides(graph, std::vector<char>);
  rooted_tree_view(graph t, std::vector<char> in_a) : g_(std::move(t)), in_a_(std::move(in_a)) { init(); }

  void init() {
    const auto n = g_.order();
    parent_.assign(n, 0);
    bfs_.clear();
    bfs_.reserve(n);
    std::vector<char> seen(n, 0);
    bfs_.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < bfs_.size(); ++i)
      for (vertex w : g_.neighbors(bfs_[i]))
        if (!seen[w]) {
          seen[w] = 1;
          parent_[w] = bfs_[i];
          bfs_.push_back(w);
        }
    side_a_.clear();
    side_b_.clear();
    for (vertex v = 0; v < n; ++v) (in_a_[v] ? side_a_ : side_b_).push_back(v);
  }

  graph g_;
  std::vector<char> in_a_;
  std::vector<vertex> parent_, bfs_;
  vertex_set side_a_, side_b_;
};

inline rooted_tree_view with_sides(graph t, std::vector<char> in_a) { return rooted_tree_view(std::move(t), std::move(in_a)); }

namespace detail {

// Minimum dominating set of the forest g - skip (skip = npos keeps every
// vertex). Three states per rooted subtree: the root is in the set, the
// root is dominated by a child, or the root is left for its parent.
struct forest_dp {
  static constexpr vertex npos = static_cast<vertex>(-1);
  static constexpr std::uint32_t inf = std::numeric_limits<std::uint32_t>::max() / 4;

  enum state : std::uint8_t { taken, covered, waiting };

  const graph& g;
  vertex skip;
  std::vector<vertex> order, parent;
  std::vector<std::array<std::uint32_t, 3>> cost;

  forest_dp(const graph& forest, vertex skip_vertex) : g(forest), skip(skip_vertex) {
    const auto n = g.order();
    parent.assign(n, npos);
    order.reserve(n);
    std::vector<char> seen(n, 0);
    if (skip != npos) seen[skip] = 1;
    for (vertex r = 0; r < n; ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      std::size_t head = order.size();
      order.push_back(r);
      for (; head < order.size(); ++head)
        for (vertex w : g.neighbors(order[head]))
          if (!seen[w]) {
            seen[w] = 1;
            parent[w] = order[head];
            order.push_back(w);
          }
    }
    cost.assign(n, {0, 0, 0});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      vertex v = *it;
      std::uint64_t in = 1, cov = 0, wait = 0;
      std::uint32_t extra = inf;
      bool child_taken = false, any_child = false;
      for (vertex c : g.neighbors(v)) {
        if (c == skip || parent[c] != v) continue;
        any_child = true;
        const auto& k = cost[c];
        in += std::min({k[taken], k[covered], k[waiting]});
        auto best = std::min(k[taken], k[covered]);
        cov += best;
        if (k[taken] <= k[covered]) child_taken = true;
        else extra = std::min(extra, k[taken] - k[covered]);
        wait += k[covered];
      }
      if (!any_child) cov = inf;
      else if (!child_taken) cov += extra;
      auto clamp = [](std::uint64_t x) { return static_cast<std::uint32_t>(std::min<std::uint64_t>(x, inf)); };
      cost[v] = {clamp(in), clamp(cov), clamp(wait)};
    }
  }

  std::size_t value() const {
    std::size_t total = 0;
    for (vertex v : order)
      if (parent[v] == npos) total += std::min(cost[v][taken], cost[v][covered]);
    return total;
  }

  vertex_set witness() const {
    std::vector<state> st(g.order(), waiting);
    vertex_set out;
    for (vertex v : order) {
      if (parent[v] == npos) st[v] = cost[v][taken] <= cost[v][covered] ? taken : covered;
      const state s = st[v];
      if (s == taken) out.push_back(v);
      vertex forced = npos;
      std::uint32_t forced_gap = inf;
      bool child_taken = false;
      for (vertex c : g.neighbors(v)) {
        if (c == skip || parent[c] != v) continue;
        const auto& k = cost[c];
        if (s == taken) {
          st[c] = k[taken] <= k[covered] && k[taken] <= k[waiting] ? taken : (k[covered] <= k[waiting] ? covered : waiting);
        } else if (s == covered) {
          st[c] = k[taken] <= k[covered] ? taken : covered;
          if (st[c] == taken) child_taken = true;
          else if (k[taken] - k[covered] < forced_gap) forced_gap = k[taken] - k[covered], forced = c;
        } else {
          st[c] = covered;
        }
      }
      if (s == covered && !child_taken) st[forced] = taken;
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace detail

inline oracle_result tree_gamma(const rooted_tree_view& t) {
  detail::forest_dp dp(t.tree(), detail::forest_dp::npos);
  oracle_result r{dp.value(), dp.witness(), t.order()};
  if (r.witness.size() != r.value) throw std::logic_error("tree DP witness has the wrong size");
  return r;
}

inline std::size_t forest_gamma_without(const graph& forest, vertex removed) {
  return detail::forest_dp(forest, removed).value();
}

inline bool is_tree_vertex_gamma_minus_critical(const rooted_tree_view& t, vertex v) {
  return forest_gamma_without(t.tree(), v) < tree_gamma(t).value;
}

// gamma(T - v) == gamma(T) - 1, one DP run per vertex.
inline vertex_set gamma_minus_critical_vertices(const rooted_tree_view& t) {
  const auto whole = tree_gamma(t).value;
  vertex_set out;
  for (vertex v = 0; v < t.order(); ++v)
    if (forest_gamma_without(t.tree(), v) < whole) out.push_back(v);
  return out;
}

enum class op_kind : std::uint8_t { o1 = 1, o2 = 2, o3 = 3, o4 = 4 };

struct tree_op {
  op_kind kind;
  vertex attacher;
  friend bool operator==(const tree_op&, const tree_op&) = default;
};

// Fresh ids for an operation applied to a tree of order n: O1 adds b, O2
// adds a, O3 and O4 add a then b.
inline vertex_set new_ids(op_kind kind, std::size_t n) {
  auto first = static_cast<vertex>(n);
  if (kind == op_kind::o1 || kind == op_kind::o2) return {first};
  return {first, first + 1};
}

struct build_script {
  std::vector<tree_op> ops;
  friend bool operator==(const build_script&, const build_script&) = default;
};

inline std::string op_name(op_kind k) { return "O" + std::to_string(static_cast<int>(k)); }

// Why op cannot be applied to t, or nothing if it can.
inline std::optional<std::string> precondition_failure(const rooted_tree_view& t, const tree_op& op) {
  const auto v = op.attacher;
  if (v >= t.order()) return "attacher is not a vertex of the tree";
  const auto& g = t.tree();
  auto is_leaf = [&](vertex w) { return g.degree(w) == 1; };
  auto is_support = [&](vertex w) {
    for (vertex x : g.neighbors(w))
      if (is_leaf(x)) return true;
    return false;
  };
  switch (op.kind) {
    case op_kind::o1:
      if (!t.in_a(v)) return "attacher must lie in A";
      return std::nullopt;
    case op_kind::o2:
      if (t.in_a(v)) return "attacher must lie in B";
      if (is_leaf(v)) return "attacher is a leaf";
      for (vertex w : g.neighbors(v))
        if (!is_support(w)) return "attacher has a neighbor that is not a support";
      if (t.side_a().size() + 1 > t.side_b().size()) return "A would become the larger side";
      return std::nullopt;
    case op_kind::o3:
      if (!t.in_a(v)) return "attacher must lie in A";
      if (!is_support(v)) return "attacher is not a support";
      return std::nullopt;
    case op_kind::o4:
      if (t.in_a(v)) return "attacher must lie in B";
      if (is_tree_vertex_gamma_minus_critical(t, v)) return "attacher is gamma-minus-critical";
      return std::nullopt;
  }
  return "unknown operation";
}

inline rooted_tree_view apply_operation(const rooted_tree_view& t, const tree_op& op) {
  if (auto why = precondition_failure(t, op))
    throw error(errc::precondition_violated, op_name(op.kind) + " at " + std::to_string(op.attacher) + ": " + *why,
                {op.attacher});
  auto es = t.tree().edges();
  auto sides = std::vector<char>(t.order());
  for (vertex v = 0; v < t.order(); ++v) sides[v] = t.in_a(v);
  const auto ids = new_ids(op.kind, t.order());
  switch (op.kind) {
    case op_kind::o1:
      es.emplace_back(op.attacher, ids[0]);
      sides.push_back(0);
      break;
    case op_kind::o2:
      es.emplace_back(op.attacher, ids[0]);
      sides.push_back(1);
      break;
    case op_kind::o3:  // a' - b - a
      es.emplace_back(op.attacher, ids[1]);
      es.emplace_back(ids[1], ids[0]);
      sides.push_back(1);
      sides.push_back(0);
      break;
    case op_kind::o4:  // b' - a - b
      es.emplace_back(op.attacher, ids[0]);
      es.emplace_back(ids[0], ids[1]);
      sides.push_back(1);
      sides.push_back(0);
      break;
  }
  graph grown(sides.size(), es);
  return with_sides(std::move(grown), std::move(sides));
}

// K2 with A = {0}.
inline rooted_tree_view base_tree() { return with_sides(graph(2, {{0, 1}}), {1, 0}); }

inline rooted_tree_view replay(const build_script& script) {
  auto t = base_tree();
  for (const auto& op : script.ops) t = apply_operation(t, op);
  return t;
}

// Starting from K2, applies `steps` random applicable operations. A sampled
// operation whose precondition fails is re-drawn up to 64 times before the
// step falls back to O1 at a random A-vertex.
inline std::pair<rooted_tree_view, build_script> generate_tmax(std::size_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto t = base_tree();
  build_script script;
  for (std::size_t s = 0; s < steps; ++s) {
    std::optional<tree_op> chosen;
    for (int attempt = 0; attempt < 64 && !chosen; ++attempt) {
      auto kind = static_cast<op_kind>(1 + pick(4));
      bool on_a = kind == op_kind::o1 || kind == op_kind::o3;
      const auto& side = on_a ? t.side_a() : t.side_b();
      tree_op op{kind, side[pick(side.size())]};
      if (!precondition_failure(t, op)) chosen = op;
    }
    if (!chosen) chosen = tree_op{op_kind::o1, t.side_a()[pick(t.side_a().size())]};
    t = apply_operation(t, *chosen);
    script.ops.push_back(*chosen);
  }
  return {std::move(t), std::move(script)};
}

// A build script plus, for every vertex of the replayed tree, the id it has
// in the tree that was deconstructed.
struct deconstruction {
  build_script script;
  std::vector<vertex> original_ids;
};

// Relabels a replayed tree back onto the deconstructed tree's ids.
inline graph relabel(const graph& replayed, const std::vector<vertex>& original_ids) {
  std::vector<edge> es;
  for (auto [u, v] : replayed.edges()) es.emplace_back(original_ids[u], original_ids[v]);
  return graph(replayed.order(), es);
}

// Recovers a build script for t, or nothing when gamma(t) < |A|. Reduction
// order at each stage: star, equal sides (corona), a leaf in A (removed
// alone, or with its neighbor when that neighbor has degree 2), then the
// end of a longest path. Ties go to the smallest id.
inline std::optional<deconstruction> deconstruct(const rooted_tree_view& t) {
  const auto& g = t.tree();
  const auto n = g.order();
  if (n < 2) throw error(errc::too_small, "deconstruction needs at least two vertices");
  if (tree_gamma(t).value != t.side_a().size()) return std::nullopt;

  std::vector<char> alive(n, 1);
  std::vector<std::size_t> deg(n);
  for (vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::size_t alive_count = n, a_count = t.side_a().size(), b_count = t.side_b().size();

  struct reduction {
    op_kind kind;
    vertex attacher;
    vertex_set added;  // original ids in new-id order
  };
  std::vector<reduction> steps;

  auto kill = [&](vertex v) {
    alive[v] = 0;
    --alive_count;
    (t.in_a(v) ? a_count : b_count) -= 1;
    for (vertex w : g.neighbors(v))
      if (alive[w]) --deg[w];
  };
  auto only_neighbor = [&](vertex v) {
    for (vertex w : g.neighbors(v))
      if (alive[w]) return w;
    throw std::logic_error("isolated vertex during deconstruction");
  };
  auto bfs = [&](vertex s, std::vector<vertex>& parent) {
    std::vector<std::size_t> dist(n, static_cast<std::size_t>(-1));
    parent.assign(n, s);
    std::vector<vertex> q{s};
    dist[s] = 0;
    vertex far = s;
    for (std::size_t i = 0; i < q.size(); ++i) {
      vertex u = q[i];
      if (dist[u] > dist[far] || (dist[u] == dist[far] && u < far)) far = u;
      for (vertex w : g.neighbors(u))
        if (alive[w] && dist[w] == static_cast<std::size_t>(-1)) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push_back(w);
        }
    }
    return far;
  };

  while (alive_count > 2) {
    std::optional<vertex> center;
    for (vertex v = 0; v < n && !center; ++v)
      if (alive[v] && deg[v] + 1 == alive_count) center = v;
    if (center) {
      vertex leaf = 0;
      while (!alive[leaf] || leaf == *center) ++leaf;
      steps.push_back({op_kind::o1, *center, {leaf}});
      kill(leaf);
      continue;
    }
    if (a_count == b_count) {
      std::optional<vertex> pick;
      for (vertex v = 0; v < n && !pick; ++v) {
        if (!alive[v] || deg[v] != 2) continue;
        for (vertex w : g.neighbors(v))
          if (alive[w] && deg[w] == 1) pick = v;
      }
      if (!pick) throw std::logic_error("equal sides without a degree-2 support");
      vertex v = *pick, leaf = 0, other = 0;
      for (vertex w : g.neighbors(v)) {
        if (!alive[w]) continue;
        if (deg[w] == 1) leaf = w;
        else other = w;
      }
      if (t.in_a(other)) steps.push_back({op_kind::o3, other, {leaf, v}});
      else steps.push_back({op_kind::o4, other, {v, leaf}});
      kill(leaf);
      kill(v);
      continue;
    }
    std::optional<vertex> a_leaf;
    for (vertex v = 0; v < n && !a_leaf; ++v)
      if (alive[v] && deg[v] == 1 && t.in_a(v)) a_leaf = v;
    if (a_leaf) {
      const vertex v = only_neighbor(*a_leaf);
      if (deg[v] > 2) {
        steps.push_back({op_kind::o2, v, {*a_leaf}});
        kill(*a_leaf);
      } else {
        // v would be left as a leaf, where O2 cannot attach; the pair
        // v - a_leaf hangs off a support in A instead.
        vertex u = 0;
        for (vertex w : g.neighbors(v))
          if (alive[w] && w != *a_leaf) u = w;
        steps.push_back({op_kind::o3, u, {*a_leaf, v}});
        kill(*a_leaf);
        kill(v);
      }
      continue;
    }
    vertex start = 0;
    while (!alive[start]) ++start;
    std::vector<vertex> parent;
    const vertex x0 = bfs(start, parent);
    const vertex far = bfs(x0, parent);
    bfs(far, parent);
    const vertex x1 = only_neighbor(x0);
    const vertex x2 = parent[x1];
    if (deg[x1] > 2) {
      steps.push_back({op_kind::o1, x1, {x0}});
      kill(x0);
    } else {
      steps.push_back({op_kind::o4, x2, {x1, x0}});
      kill(x0);
      kill(x1);
    }
  }

  deconstruction out;
  std::vector<vertex> replay_id(n, static_cast<vertex>(-1));
  vertex base_a = 0, base_b = 0;
  for (vertex v = 0; v < n; ++v)
    if (alive[v]) (t.in_a(v) ? base_a : base_b) = v;
  for (vertex v : {base_a, base_b}) {
    replay_id[v] = static_cast<vertex>(out.original_ids.size());
    out.original_ids.push_back(v);
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    out.script.ops.push_back({it->kind, replay_id[it->attacher]});
    for (vertex v : it->added) {
      replay_id[v] = static_cast<vertex>(out.original_ids.size());
      out.original_ids.push_back(v);
    }
  }
  return out;
}

// The tree form of the bipartite conditions: supports in B are weak with
// only supports as non-leaf neighbors, and no free B-vertex sees two
// non-support A-vertices. Equal sides reduce to the corona test.
inline verdict check_tree_conditions(const rooted_tree_view& t) {
  const auto& g = t.tree();
  if (g.order() < 2) throw error(errc::too_small, "tree conditions need at least two vertices");
  if (t.side_a().size() == t.side_b().size()) {
    if (is_corona(g)) return verdict::accept(t.side_a());
    return verdict::reject(condition::corona_or_c4, detail::corona_offenders(g));
  }
  const auto mk = marks_of(g);
  for (vertex b : t.side_b()) {
    if (!mk.is_support(b)) continue;
    if (!mk.is_weak_support(b)) return verdict::reject(condition::b_weak_support, {b});
    for (vertex w : g.neighbors(b))
      if (!mk.is_leaf(w) && !mk.is_support(w)) return verdict::reject(condition::b_weak_support, {b, w});
  }
  std::uint64_t checks = 0;
  for (vertex z : t.side_b()) {
    if (mk.is_leaf(z) || mk.is_support(z)) continue;
    vertex_set seen;
    for (vertex w : g.neighbors(z)) {
      ++checks;
      if (!mk.is_support(w)) seen.push_back(w);
    }
    if (seen.size() > 1) return verdict::reject(condition::b_pair_witnesses, {seen[0], seen[1]}, checks);
  }
  return verdict::accept(t.side_a(), checks);
}

// One operation per line: "O<k> <attacher>".
inline std::string format_script(const build_script& s) {
  std::string out;
  for (const auto& op : s.ops) out += op_name(op.kind) + " " + std::to_string(op.attacher) + "\n";
  return out;
}

inline build_script parse_script(const std::string& text) {
  build_script s;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind, trailing;
    long long attacher = -1;
    if (!(ls >> kind)) continue;
    if (kind[0] == '#') continue;
    if (kind.size() != 2 || kind[0] != 'O' || kind[1] < '1' || kind[1] > '4' || !(ls >> attacher) || attacher < 0 ||
        (ls >> trailing))
      throw error(errc::parse_error, "script line " + std::to_string(lineno) + ": '" + line + "'", {lineno});
    s.ops.push_back({static_cast<op_kind>(kind[1] - '0'), static_cast<vertex>(attacher)});
  }
  return s;
}

}  // namespace eqdom
