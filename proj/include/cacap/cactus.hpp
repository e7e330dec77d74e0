#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cacap {

using Vertex = std::int32_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// A connected multigraph whose blocks are exactly the listed cycles.
///
/// A cycle of length 2 stands for a pair of parallel edges. Edge `i` of a
/// cycle joins positions `i` and `i + 1` (cyclically). A single vertex with
/// no cycles is a valid (trivial) cactus; it is what contracting away every
/// 2-cut leaves behind.
class Cactus {
 public:
  /// Checks every structural invariant and throws `Error` naming the first
  /// violation (DegenerateCycle, VertexOutOfRange, EdgeInTwoCycles,
  /// Disconnected).
  static Cactus validate(int vertex_count, std::vector<std::vector<Vertex>> cycles);

  int vertex_count() const { return vertex_count_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  const std::vector<std::vector<Vertex>>& cycles() const { return cycles_; }
  const std::vector<Vertex>& cycle(int id) const { return cycles_[id]; }

  /// Cycles through `v`, in increasing id order.
  const std::vector<int>& cycles_at(Vertex v) const { return cycles_at_[v]; }

  /// Degree counted with edge multiplicity: two per incident cycle.
  int degree(Vertex v) const { return 2 * static_cast<int>(cycles_at_[v].size()); }
  bool is_leaf(Vertex v) const { return degree(v) == 2; }
  std::vector<Vertex> leaves() const;
  VertexSet leaf_set() const;

  /// Vertices lying on every u-v path: u, v and the articulation vertices
  /// on the block-cut tree path between them. Sorted.
  std::vector<Vertex> must_pass(Vertex u, Vertex v) const;

  /// Vertices hanging off position `pos` of cycle `cycle_id` when that cycle
  /// is removed (the vertex itself plus everything reachable from it without
  /// using the cycle's edges).
  VertexSet hanging_set(int cycle_id, int pos) const;

  bool operator==(const Cactus& other) const {
    return vertex_count_ == other.vertex_count_ && cycles_ == other.cycles_;
  }

 private:
  Cactus() = default;

  // Block-cut tree nodes: vertices are 0..n-1, cycle c is node n + c.
  int node_of_cycle(int c) const { return vertex_count_ + c; }

  int vertex_count_ = 0;
  std::vector<std::vector<Vertex>> cycles_;
  std::vector<std::vector<int>> cycles_at_;
  std::vector<int> tree_parent_;
  std::vector<int> tree_depth_;
  std::vector<VertexSet> subtree_;
};

}  // namespace cacap
