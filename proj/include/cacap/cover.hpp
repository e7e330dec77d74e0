#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cacap {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Cover `element_count` elements with a minimum-weight family of `sets`.
struct SetCoverProblem {
  int element_count = 0;
  std::vector<ElementSet> sets;
  std::vector<std::int64_t> weights;  // positive; empty means all 1
};

struct SetCoverOptions {
  /// Also collect every optimal family (up to `optimum_limit` of them).
  bool enumerate_optima = false;
  std::size_t optimum_limit = 4096;
  /// Branch-and-bound nodes before giving up with BudgetExceeded; 0 = no limit.
  std::int64_t node_limit = 0;
};

struct SetCoverResult {
  bool feasible = false;
  /// An element no set contains, when infeasible.
  int uncoverable = -1;
  std::int64_t value = 0;
  std::vector<int> chosen;  // sorted set indices
  std::vector<std::vector<int>> optima;
  bool optima_complete = true;
  std::int64_t nodes = 0;
};

/// Exact branch-and-bound: branch on the uncovered element with the fewest
/// candidate sets, excluding sets tried by earlier siblings; bound by a
/// greedy packing of elements with pairwise disjoint candidate sets.
SetCoverResult solve_set_cover(const SetCoverProblem& problem, const SetCoverOptions& options = {});

}  // namespace cacap
