#include "cacap/exact.hpp"

#include <algorithm>
#include <string>

#include "cacap/cover.hpp"
#include "cacap/error.hpp"

namespace cacap {

namespace {

SetCoverProblem link_cover_problem(const Instance& instance, std::int64_t in_weight, std::int64_t cross_weight) {
  const CoverageIndex index(instance);
  SetCoverProblem p;
  p.element_count = index.cut_count();
  p.sets = index.link_cover;
  const auto classes = classify_links(instance);
  for (LinkClass c : classes) p.weights.push_back(c == LinkClass::In ? in_weight : cross_weight);
  return p;
}

SetCoverResult solve_or_throw(const SetCoverProblem& p, const SetCoverOptions& o = {}) {
  auto r = solve_set_cover(p, o);
  if (!r.feasible) throw Error(ErrorCode::InfeasibleInstance, "a 2-cut is covered by no link");
  return r;
}

}  // namespace

OptCertificate brute_force_opt(const Instance& instance, const ExactOptions& options) {
  if (instance.link_count() > options.link_budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(instance.link_count()) + " links exceed the budget of " +
                                               std::to_string(options.link_budget));
  }
  OptCertificate cert;
  SetCoverOptions o;
  o.enumerate_optima = options.enumerate_optima;
  const auto plain = solve_or_throw(link_cover_problem(instance, 1, 1), o);
  cert.opt_value = static_cast<int>(plain.value);
  cert.optimum = plain.chosen;
  if (options.enumerate_optima) {
    for (const auto& s : plain.optima) cert.all_optima.emplace_back(s.begin(), s.end());
    cert.optima_complete = plain.optima_complete;
  }
  cert.twice_min_half_in = solve_or_throw(link_cover_problem(instance, 3, 2)).value;
  cert.min_plus_cross = solve_or_throw(link_cover_problem(instance, 1, 2)).value;
  return cert;
}

std::vector<LinkId> optimal_links(const Instance& instance) {
  const auto r = solve_or_throw(link_cover_problem(instance, 1, 1));
  return {r.chosen.begin(), r.chosen.end()};
}

Solution solve_subcacti(const Instance& instance, int leaf_cap) {
  std::vector<LinkId> ids;
  for (const auto& sub : principal_subcacti(instance)) {
    const auto leaves = (sub.component & instance.cactus().leaf_set()).count();
    if (static_cast<int>(leaves) > leaf_cap) {
      throw Error(ErrorCode::SubcactusTooLarge,
                  std::to_string(leaves) + " leaves in one subcactus, cap " + std::to_string(leaf_cap));
    }
    for (LinkId local : optimal_links(sub.derived.instance)) ids.push_back(sub.derived.link_origin[local]);
  }
  return make_solution(instance, std::move(ids));
}

CombinedResult solve_combined(const Instance& instance, int leaf_cap) {
  CombinedResult r{{}, run_matching_algorithm(instance), solve_subcacti(instance, leaf_cap), true};
  r.used_matching = r.matching.solution().size() <= r.subcactus.size();
  r.solution = r.used_matching ? r.matching.solution() : r.subcactus;
  return r;
}

}  // namespace cacap
