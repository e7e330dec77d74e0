#pragma once

#include <vector>

#include "cacap/cactus.hpp"

namespace cacap {

using LinkId = std::int32_t;

struct Link {
  Vertex u = 0;
  Vertex v = 0;

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool operator==(const Link&) const = default;
};

enum class LinkClass { In, Cross };

/// A cactus, its links and a distinguished root. Link ids are positions in
/// `links()`.
class Instance {
 public:
  /// Throws InvalidLink for loops or out-of-range endpoints and
  /// VertexOutOfRange for a bad root.
  Instance(Cactus cactus, std::vector<Link> links, Vertex root = 0);

  const Cactus& cactus() const { return cactus_; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(LinkId id) const { return links_[id]; }
  int link_count() const { return static_cast<int>(links_.size()); }
  int vertex_count() const { return cactus_.vertex_count(); }
  Vertex root() const { return root_; }

  bool operator==(const Instance&) const = default;

 private:
  Cactus cactus_;
  std::vector<Link> links_;
  Vertex root_;
};

/// Provenance of a derived instance's vertices. `forward[v]` is the image of
/// original vertex `v` (or -1 if it was dropped); `merged_groups` lists, for
/// each supernode created by contraction, the original vertices merged into it.
struct VertexMap {
  std::vector<Vertex> forward;
  std::vector<std::vector<Vertex>> merged_groups;

  static VertexMap identity(int n);
  /// Original vertices mapping to `image`.
  std::vector<Vertex> preimage(Vertex image) const;
  /// `then` applied after `*this`.
  VertexMap compose(const VertexMap& then) const;
};

/// An instance produced by a transform, with vertex and link provenance.
/// `link_origin[i]` is the id in the source instance that link `i` came from,
/// or -1 for links the transform introduced.
struct DerivedInstance {
  Instance instance;
  VertexMap vertices;
  std::vector<LinkId> link_origin;
};

/// Component id of each vertex in G - root; the root gets -1.
std::vector<int> root_components(const Instance& instance);

LinkClass classify_link(const Instance& instance, const Link& link);
LinkClass classify_link(const Instance& instance, const std::vector<int>& components,
                        const Link& link);
std::vector<LinkClass> classify_links(const Instance& instance);

bool is_leaf_to_leaf(const Instance& instance);
bool is_leaf_to_leaf_plus(const Instance& instance);

/// Largest number of leaves in one component of G - root.
int k_wideness(const Instance& instance);

/// One principal subcactus: the component `component` of G - root together
/// with the root. Links with an endpoint in the component are kept; an
/// endpoint outside it is re-targeted to the root.
struct Subcactus {
  VertexSet component;
  DerivedInstance derived;
};

std::vector<Subcactus> principal_subcacti(const Instance& instance);

}  // namespace cacap
