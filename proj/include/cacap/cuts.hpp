#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cacap/instance.hpp"

namespace cacap {

using CutSet = boost::dynamic_bitset<std::uint64_t>;

/// A 2-cut: the side of a pair of edges of one cycle that avoids the root.
struct TwoCut {
  VertexSet vertices;
  int cycle = -1;
  int first_edge = -1;
  int second_edge = -1;

  bool contains(Vertex v) const { return vertices.test(static_cast<std::size_t>(v)); }
  std::vector<Vertex> members() const;
};

/// One cut per unordered pair of edges of a common cycle, cycle by cycle.
std::vector<TwoCut> enumerate_two_cuts(const Instance& instance);

inline bool covers(const Link& link, const TwoCut& cut) {
  return cut.contains(link.u) != cut.contains(link.v);
}

/// Covers with an arbitrary vertex pair (shadows are vertex pairs too).
inline bool covers_pair(Vertex a, Vertex b, const TwoCut& cut) {
  return cut.contains(a) != cut.contains(b);
}

/// Cuts of an instance plus, per link, the cuts it covers.
struct CoverageIndex {
  std::vector<TwoCut> cuts;
  std::vector<CutSet> link_cover;

  explicit CoverageIndex(const Instance& instance);

  int cut_count() const { return static_cast<int>(cuts.size()); }
  CutSet pair_cover(Vertex a, Vertex b) const;
  CutSet cover_of(std::span<const LinkId> ids) const;
};

struct Solution {
  std::vector<LinkId> link_ids;
  int in_count = 0;
  int cross_count = 0;

  int size() const { return static_cast<int>(link_ids.size()); }
  bool operator==(const Solution&) const = default;
};

/// Sorted, deduplicated ids with in/cross counts filled in.
Solution make_solution(const Instance& instance, std::vector<LinkId> ids);

struct CheckResult {
  bool feasible = false;
  Solution solution;
  std::optional<TwoCut> witness;
};

/// Feasible iff every 2-cut is covered; otherwise reports an uncovered cut.
/// Throws UnknownLinkId for ids outside the link list.
CheckResult check_solution(const Instance& instance, std::span<const LinkId> ids);

/// Independent check: global minimum cut of the cactus plus the chosen links
/// is at least three (Stoer-Wagner).
bool three_edge_connected_with(const Instance& instance, std::span<const LinkId> ids);

std::vector<LinkId> all_link_ids(const Instance& instance);

}  // namespace cacap
