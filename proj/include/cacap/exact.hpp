#pragma once

#include <cstdint>
#include <vector>

#include "cacap/completion.hpp"
#include "cacap/cuts.hpp"

namespace cacap {

struct OptCertificate {
  int opt_value = 0;
  std::vector<LinkId> optimum;
  /// Every optimal link set, when requested (capped by `optima_complete`).
  std::vector<std::vector<LinkId>> all_optima;
  bool optima_complete = true;
  /// min over feasible H of 2|H| + |H_in|, i.e. twice |H| + |H_in|/2.
  std::int64_t twice_min_half_in = 0;
  /// min over feasible H of |H| + |H_cross|.
  std::int64_t min_plus_cross = 0;
};

struct ExactOptions {
  /// Largest link count accepted; BudgetExceeded above it.
  int link_budget = 20;
  bool enumerate_optima = false;
};

/// Exact optimum plus the two weighted minima. Throws BudgetExceeded or
/// InfeasibleInstance.
OptCertificate brute_force_opt(const Instance& instance, const ExactOptions& options = {});

/// Minimum-cardinality feasible link set, or InfeasibleInstance.
std::vector<LinkId> optimal_links(const Instance& instance);

/// Solves every principal subcactus optimally and returns the union of
/// their solutions. Throws SubcactusTooLarge when a component has more than
/// `leaf_cap` leaves, and InfeasibleInstance.
Solution solve_subcacti(const Instance& instance, int leaf_cap = 8);

struct CombinedResult {
  Solution solution;
  MatchingRun matching;
  Solution subcactus;
  bool used_matching = true;
};

/// The smaller of the matching-algorithm and subcactus solutions (ties go to
/// the matching algorithm).
CombinedResult solve_combined(const Instance& instance, int leaf_cap = 8);

}  // namespace cacap
