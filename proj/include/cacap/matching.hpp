#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cacap/cuts.hpp"

namespace cacap {

/// Leaves inside `cut` that are an endpoint of some link covering it.
VertexSet cut_terminal_set(const Instance& instance, const TwoCut& cut);

struct BadLink {
  LinkId id = -1;
  /// A cut C with T_C within the link's endpoints, both endpoints in C.
  TwoCut witness;
};

/// Bad links in id order, each with the first witnessing cut found.
std::vector<BadLink> bad_links_with_witness(const Instance& instance);
std::vector<LinkId> bad_links(const Instance& instance);

/// Whether `witness` really shows that `id` is bad.
bool is_bad_witness(const Instance& instance, LinkId id, const TwoCut& witness);

/// Leaf-to-leaf links that are not bad.
std::vector<LinkId> eligible_links(const Instance& instance);

struct Matching {
  std::vector<LinkId> link_ids;
  VertexSet covered_leaves;
  int in_count = 0;
  int cross_count = 0;

  int size() const { return static_cast<int>(link_ids.size()); }
  /// Cross-links weigh 2, in-links 1.
  std::int64_t scaled_weight() const { return 2 * cross_count + in_count; }
};

/// Builds a Matching from link ids. Throws InvalidLink if two links share an
/// endpoint.
Matching make_matching(const Instance& instance, std::vector<LinkId> ids);

/// Twice |M| + |M_in|/2 + (|T| - 2|M|), the completion cost bound of M.
std::int64_t twice_matching_objective(const Instance& instance, const Matching& matching);

/// Maximum-weight matching over `candidates` (cross 2, in 1). Among all
/// maximisers the lexicographically smallest sorted id list is returned.
Matching max_weight_matching(const Instance& instance, std::span<const LinkId> candidates);

/// Step (1) of the matching algorithm: maximum weight over eligible links.
Matching max_weight_matching(const Instance& instance);

/// Maximum-cardinality matching over `candidates`, lexicographically smallest.
Matching max_cardinality_matching(const Instance& instance, std::span<const LinkId> candidates);

}  // namespace cacap
