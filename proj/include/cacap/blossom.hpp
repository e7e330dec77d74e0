#pragma once

#include <cstdint>
#include <vector>

namespace cacap {

struct WeightedEdge {
  int i = 0;
  int j = 0;
  std::int64_t weight = 0;
};

/// Maximum-weight matching in a general graph (Edmonds' blossom algorithm,
/// primal-dual, O(n^3)). Integer weights keep every dual value integral.
/// Returns `mate[v]`, or -1 for unmatched vertices. Parallel edges are fine.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges);

}  // namespace cacap
