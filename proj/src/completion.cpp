#include "cacap/completion.hpp"

#include <algorithm>

#include "cacap/cover.hpp"
#include "cacap/error.hpp"

namespace cacap {

std::vector<TwoCut> uncovered_cuts(const Instance& instance, std::span<const LinkId> chosen) {
  std::vector<TwoCut> out;
  for (auto& cut : enumerate_two_cuts(instance)) {
    bool hit = std::any_of(chosen.begin(), chosen.end(),
                           [&](LinkId id) { return covers(instance.link(id), cut); });
    if (!hit) out.push_back(std::move(cut));
  }
  return out;
}

CoverProblem make_cover_problem(const Instance& instance, std::vector<TwoCut> cuts) {
  CoverProblem p;
  p.cuts = std::move(cuts);
  for (LinkId id = 0; id < instance.link_count(); ++id) {
    const Link& l = instance.link(id);
    p.arcs.push_back({l.u, l.v, id});
    p.arcs.push_back({l.v, l.u, id});
  }
  p.entering.resize(p.cuts.size());
  for (std::size_t c = 0; c < p.cuts.size(); ++c) {
    for (std::size_t a = 0; a < p.arcs.size(); ++a) {
      if (p.cuts[c].contains(p.arcs[a].head) && !p.cuts[c].contains(p.arcs[a].tail)) {
        p.entering[c].push_back(static_cast<int>(a));
      }
    }
  }
  return p;
}

DirectedCover min_directed_cover(const CoverProblem& problem) {
  DirectedCover out;
  SetCoverProblem sc;
  sc.element_count = static_cast<int>(problem.cuts.size());
  sc.sets.assign(problem.arcs.size(), ElementSet(problem.cuts.size()));
  for (std::size_t c = 0; c < problem.entering.size(); ++c) {
    for (int a : problem.entering[c]) sc.sets[a].set(c);
  }
  const auto r = solve_set_cover(sc);
  if (!r.feasible) {
    out.witness = problem.cuts[r.uncoverable];
    return out;
  }
  out.feasible = true;
  out.arcs = r.chosen;
  for (int a : out.arcs) out.links.push_back(problem.arcs[a].source_link);
  std::sort(out.links.begin(), out.links.end());
  out.links.erase(std::unique(out.links.begin(), out.links.end()), out.links.end());
  return out;
}

CompletionResult complete_matching(const Instance& instance, const Matching& matching) {
  auto problem = make_cover_problem(instance, uncovered_cuts(instance, matching.link_ids));
  const auto cover = min_directed_cover(problem);
  if (!cover.feasible) {
    throw Error(ErrorCode::InfeasibleInstance, "a 2-cut is covered by no link");
  }
  CompletionResult r;
  r.added = cover.links;
  r.arc_count = static_cast<int>(cover.arcs.size());
  r.leaf_count = static_cast<int>(instance.cactus().leaves().size());
  r.twice_allowance = matching.in_count + 2 * (r.leaf_count - 2 * static_cast<std::int64_t>(matching.size()));
  if (2 * static_cast<std::int64_t>(r.added.size()) > r.twice_allowance) {
    throw Error(ErrorCode::BoundViolation, "completion used more links than the matching allows");
  }
  std::vector<LinkId> all = matching.link_ids;
  all.insert(all.end(), r.added.begin(), r.added.end());
  r.solution = make_solution(instance, std::move(all));
  return r;
}

MatchingRun run_matching_algorithm(const Instance& instance) {
  if (!is_leaf_to_leaf_plus(instance)) {
    throw Error(ErrorCode::NotLeafToLeafPlus, "a link endpoint is neither a leaf nor the root");
  }
  Matching m = max_weight_matching(instance);
  CompletionResult c = complete_matching(instance, m);
  return {std::move(m), std::move(c)};
}

}  // namespace cacap
