#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cacap/cuts.hpp"
#include "cacap/instance.hpp"

namespace cacap {

/// A tree augmentation instance: `edges` must form a spanning tree.
struct TapInstance {
  int vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Link> links;
  Vertex root = 0;
};

/// Doubles every tree edge into a 2-cycle. Throws NotATree.
Instance tap_to_cacap(const TapInstance& tap);

/// Merges `group` into one fresh vertex, the highest id of the result. Other
/// vertices keep their relative order. Cycles passing through the group
/// several times split there; edges inside the group vanish. Links inside the
/// group are dropped, parallel links are kept.
DerivedInstance contract_vertices(const Instance& instance, std::span<const Vertex> group);

struct SplitResult {
  DerivedInstance inside;   // V \ C contracted into a leaf
  DerivedInstance outside;  // C contracted into a leaf
};

/// Splits at a vertex set with exactly two cactus edges leaving it.
/// Throws NotATwoCut otherwise.
SplitResult split_at(const Instance& instance, const VertexSet& cut);

/// {u, v} plus every vertex separating u from v.
std::vector<Vertex> must_pass_vertices(const Cactus& cactus, Vertex u, Vertex v);

/// Contracts the vertices lying on every path between the link's endpoints.
DerivedInstance contract_link(const Instance& instance, const Link& link);

/// Sequentially contracts the given links (in the order given; ids refer to
/// `instance`). Links that already became loops are skipped.
DerivedInstance residual_instance_in_order(const Instance& instance, std::span<const LinkId> order);

/// Residual instance with links contracted in increasing id order.
DerivedInstance residual_instance(const Instance& instance, std::vector<LinkId> ids);

/// Adds {u, r} and {v, r} for every cross-link {u, v}, skipping pairs that
/// already exist. New links are appended. Throws NotLeafToLeafPlus.
Instance root_shadow_completion(const Instance& instance);

/// Number of non-leaf vertices that are endpoints of some link.
int non_leaf_endpoint_count(const Instance& instance);

struct LeafifyResult {
  /// Contracted links, in the order they were chosen.
  std::vector<LinkId> x;
  /// Residual instance with respect to `x`.
  DerivedInstance residual;
  /// Residual instance with an auxiliary leaf hung off every linked
  /// supernode; its links point at the auxiliary leaves instead.
  DerivedInstance leafified;
};

/// Turns a feasible instance into a leaf-to-leaf one by contracting at most
/// `non_leaf_endpoint_count` links and attaching auxiliary leaves to
/// supernodes. Throws InfeasibleInstance.
LeafifyResult construct_x_and_leafify(const Instance& instance);

/// Order-independent description of a derived instance in terms of the
/// original vertex and link ids: vertices are named by their smallest
/// preimage, cycles are normalised under rotation and reflection.
std::string provenance_key(const DerivedInstance& derived);

}  // namespace cacap
