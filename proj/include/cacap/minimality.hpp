#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cacap/cuts.hpp"

namespace cacap {

using VertexPair = std::pair<Vertex, Vertex>;

/// Pairs {a, b} (a < b) of vertices lying on every u-v path of the link.
std::vector<VertexPair> shadows(const Instance& instance, const Link& link);

/// Shadows other than the link's own endpoint pair.
std::vector<VertexPair> strict_shadows(const Instance& instance, const Link& link);

/// Whether every strict shadow of `l1` together with `l2` covers strictly
/// fewer cuts than {l1, l2}, and `l2` alone does too.
bool is_minimal_wrt(const Instance& instance, const CoverageIndex& index, LinkId l1, LinkId l2);
bool is_minimal_wrt(const Instance& instance, LinkId l1, LinkId l2);

/// Every ordered pair of distinct cross-links of `chosen` is minimal.
bool is_weakly_cross_minimal(const Instance& instance, std::span<const LinkId> chosen);

struct WeakMinimalityReport {
  int optimum_count = 0;
  int weakly_minimal_count = 0;
  std::vector<LinkId> witness;  // a weakly minimal optimum, if any
};

/// Enumerates every optimum and tests it. Throws BudgetExceeded when the
/// instance or the number of optima is too large.
WeakMinimalityReport weak_minimality_report(const Instance& instance, int link_budget = 20);
bool exists_weakly_minimal_optimum(const Instance& instance, int link_budget = 20);

}  // namespace cacap
