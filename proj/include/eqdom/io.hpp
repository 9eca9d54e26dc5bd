#pragma once

// Text formats: DIMACS-like edge lists ("p n m" / "e u v" / "c ...") and grid
// files ("H y x1 x2" / "V x y1 y2" / "# ...") with exact decimal coordinates.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "eqdom/error.hpp"
#include "eqdom/graph.hpp"
#include "eqdom/grid.hpp"

namespace eqdom {

namespace detail {

inline error parse_failure(std::size_t line, const std::string& what) {
  return error(errc::parse_error, "line " + std::to_string(line) + ": " + what, {line});
}

inline bool parse_label(const std::string& tok, std::uint64_t& out) {
  if (tok.empty() || tok.size() > 19) return false;
  out = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

}  // namespace detail

struct graph_file {
  graph g;
  // labels[i] is the label vertex i carried in the file.
  std::vector<std::uint64_t> labels;
};

// Labels need not be dense: the distinct labels, topped up with the smallest
// unused integers when fewer than n appear, are sorted and numbered 0..n-1.
inline graph_file parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (tag == "p") {
      if (have_header) throw detail::parse_failure(lineno, "second 'p' line");
      // "p <n> <m>", also accepting the DIMACS "p edge <n> <m>".
      if (toks.size() == 3 && (toks[0] == "edge" || toks[0] == "col")) toks.erase(toks.begin());
      if (toks.size() != 2 || !detail::parse_label(toks[0], n) || !detail::parse_label(toks[1], m))
        throw detail::parse_failure(lineno, "expected 'p <n> <m>'");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw detail::parse_failure(lineno, "edge before 'p' line");
      std::uint64_t u = 0, v = 0;
      if (toks.size() != 2 || !detail::parse_label(toks[0], u) || !detail::parse_label(toks[1], v))
        throw detail::parse_failure(lineno, "expected 'e <u> <v>'");
      raw.emplace_back(u, v);
    } else {
      throw detail::parse_failure(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw detail::parse_failure(lineno, "missing 'p <n> <m>' line");
  if (raw.size() != m)
    throw detail::parse_failure(lineno, "header announces " + std::to_string(m) + " edges, found " + std::to_string(raw.size()));

  std::vector<std::uint64_t> labels;
  for (auto [u, v] : raw) labels.push_back(u), labels.push_back(v);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > n)
    throw detail::parse_failure(lineno, std::to_string(labels.size()) + " distinct labels for n=" + std::to_string(n));
  for (std::uint64_t fill = 0; labels.size() < n; ++fill)
    if (!std::binary_search(labels.begin(), labels.end(), fill)) {
      labels.insert(std::lower_bound(labels.begin(), labels.end(), fill), fill);
    }
  std::vector<edge> es;
  es.reserve(raw.size());
  auto id = [&](std::uint64_t l) {
    return static_cast<vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  for (auto [u, v] : raw) es.emplace_back(id(u), id(v));
  return {graph(n, es), std::move(labels)};
}

inline std::string format_graph(const graph& g) {
  std::string out = "p " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

struct grid_file {
  std::vector<segment> segments;
  std::vector<std::size_t> lines;  // source line of each segment
  unsigned scale = 0;              // coordinates are value * 10^scale
};

namespace detail {

struct decimal {
  bool negative = false;
  std::string digits;  // integer and fraction digits, no point
  unsigned fraction = 0;
};

inline bool parse_decimal(const std::string& tok, decimal& out) {
  std::size_t i = 0;
  out = {};
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) out.negative = tok[i++] == '-';
  std::size_t int_digits = 0;
  while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') out.digits += tok[i++], ++int_digits;
  if (int_digits == 0) return false;
  if (i < tok.size() && tok[i] == '.') {
    ++i;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') out.digits += tok[i++], ++out.fraction;
    if (out.fraction == 0) return false;
  }
  return i == tok.size();
}

inline bool scaled(const decimal& d, unsigned scale, std::int64_t& out) {
  constexpr auto limit = std::numeric_limits<std::int64_t>::max() / 10;
  std::int64_t v = 0;
  for (char c : d.digits) {
    if (v > limit) return false;
    v = v * 10 + (c - '0');
  }
  for (unsigned k = d.fraction; k < scale; ++k) {
    if (v > limit) return false;
    v *= 10;
  }
  out = d.negative ? -v : v;
  return true;
}

inline std::string format_scaled(std::int64_t v, unsigned scale) {
  std::string digits = std::to_string(v < 0 ? -v : v);
  if (scale > 0) {
    if (digits.size() <= scale) digits.insert(0, scale + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale, ".");
  }
  return (v < 0 ? "-" : "") + digits;
}

}  // namespace detail

// Endpoints may come in either order; every coordinate is scaled by the
// largest number of fraction digits seen in the file.
inline grid_file parse_grid(const std::string& text) {
  struct raw_line {
    char kind;
    detail::decimal c[3];
    std::size_t line;
  };
  std::vector<raw_line> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  unsigned scale = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if ((tag != "H" && tag != "V") || toks.size() != 3)
      throw detail::parse_failure(lineno, "expected 'H <y> <x1> <x2>' or 'V <x> <y1> <y2>'");
    raw_line r{tag[0], {}, lineno};
    for (int k = 0; k < 3; ++k) {
      if (!detail::parse_decimal(toks[k], r.c[k])) throw detail::parse_failure(lineno, "bad coordinate '" + toks[k] + "'");
      scale = std::max(scale, r.c[k].fraction);
    }
    rows.push_back(r);
  }
  grid_file out;
  out.scale = scale;
  for (const auto& r : rows) {
    std::int64_t v[3];
    for (int k = 0; k < 3; ++k)
      if (!detail::scaled(r.c[k], scale, v[k])) throw detail::parse_failure(r.line, "coordinate out of range");
    out.segments.push_back(r.kind == 'H' ? horizontal(v[0], v[1], v[2]) : vertical(v[0], v[1], v[2]));
    out.lines.push_back(r.line);
  }
  return out;
}

// Normalized form: lo before hi, every coordinate with exactly `scale`
// fraction digits, so parse_grid(format_grid(..)) reproduces the values.
inline std::string format_grid(const std::vector<segment>& segs, unsigned scale) {
  std::string out;
  for (const auto& s : segs) {
    out += s.vertical() ? "V " : "H ";
    out += detail::format_scaled(s.fixed, scale) + " " + detail::format_scaled(s.lo, scale) + " " +
           detail::format_scaled(s.hi, scale) + "\n";
  }
  return out;
}

}  // namespace eqdom
