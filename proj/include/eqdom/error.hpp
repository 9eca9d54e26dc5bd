#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqdom {

enum class errc {
  out_of_range,
  self_loop,
  duplicate_edge,
  disconnected,
  not_bipartite,
  isolated_vertex,
  too_small,
  size_cap_exceeded,
  not_maximum_independent,
  x_not_in_set,
  not_a_tree,
  precondition_violated,
  too_few_segments,
  duplicate_segment,
  collinear_overlap,
  disconnected_union,
  degenerate_segment,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::out_of_range: return "OutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::disconnected: return "Disconnected";
    case errc::not_bipartite: return "NotBipartite";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::too_small: return "TooSmall";
    case errc::size_cap_exceeded: return "SizeCapExceeded";
    case errc::not_maximum_independent: return "NotMaximumIndependent";
    case errc::x_not_in_set: return "XDoesNotContainX";
    case errc::not_a_tree: return "NotATree";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::too_few_segments: return "TooFewSegments";
    case errc::duplicate_segment: return "DuplicateSegment";
    case errc::collinear_overlap: return "CollinearOverlap";
    case errc::disconnected_union: return "DisconnectedUnion";
    case errc::degenerate_segment: return "DegenerateSegment";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library. `items` holds the offending vertex or
// segment indices when the error has a natural culprit.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what, std::vector<std::size_t> items = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        items_(std::move(items)) {}

  errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& items() const noexcept { return items_; }

private:
  errc code_;
  std::vector<std::size_t> items_;
};

}  // namespace eqdom
