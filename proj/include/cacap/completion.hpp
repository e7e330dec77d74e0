#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cacap/cuts.hpp"
#include "cacap/matching.hpp"

namespace cacap {

/// 2-cuts crossed by no link of `chosen`.
std::vector<TwoCut> uncovered_cuts(const Instance& instance, std::span<const LinkId> chosen);

struct DirectedLink {
  Vertex tail = 0;
  Vertex head = 0;
  LinkId source_link = -1;
};

/// Cuts to cover and both orientations of every link. `entering[c]` lists the
/// arcs (u, v) with v in cut c and u outside it.
struct CoverProblem {
  std::vector<TwoCut> cuts;
  std::vector<DirectedLink> arcs;
  std::vector<std::vector<int>> entering;
};

/// Arcs for every link of the instance, in link order (u->v, then v->u).
CoverProblem make_cover_problem(const Instance& instance, std::vector<TwoCut> cuts);

struct DirectedCover {
  bool feasible = false;
  std::optional<TwoCut> witness;  // a cut no arc enters
  std::vector<int> arcs;          // chosen arc indices
  std::vector<LinkId> links;      // their source links, sorted and unique
};

/// Minimum number of arcs entering every cut. By integrality of the
/// directed-cut LP on these instances this is the LP optimum.
DirectedCover min_directed_cover(const CoverProblem& problem);

struct CompletionResult {
  Solution solution;
  std::vector<LinkId> added;  // U
  int arc_count = 0;
  int leaf_count = 0;
  /// Twice the allowance |M_in|/2 + (|T| - 2|M|) for the added links.
  std::int64_t twice_allowance = 0;
};

/// F = M plus a minimum directed cover of the cuts M leaves open. Throws
/// InfeasibleInstance, and BoundViolation if the added links exceed the
/// allowance.
CompletionResult complete_matching(const Instance& instance, const Matching& matching);

struct MatchingRun {
  Matching matching;
  CompletionResult completion;
  const Solution& solution() const { return completion.solution; }
};

/// Maximum-weight eligible matching, then completion. Throws
/// NotLeafToLeafPlus or InfeasibleInstance.
MatchingRun run_matching_algorithm(const Instance& instance);

}  // namespace cacap
