#include "cacap/instance.hpp"

#include <algorithm>
#include <string>

#include "cacap/error.hpp"

namespace cacap {

Instance::Instance(Cactus cactus, std::vector<Link> links, Vertex root)
    : cactus_(std::move(cactus)), links_(std::move(links)), root_(root) {
  const int n = cactus_.vertex_count();
  if (root_ < 0 || root_ >= n) {
    throw Error(ErrorCode::VertexOutOfRange, "root " + std::to_string(root_));
  }
  for (std::size_t id = 0; id < links_.size(); ++id) {
    const Link& l = links_[id];
    if (l.u < 0 || l.u >= n || l.v < 0 || l.v >= n) {
      throw Error(ErrorCode::InvalidLink, "link " + std::to_string(id) + " has an endpoint out of range");
    }
    if (l.u == l.v) {
      throw Error(ErrorCode::InvalidLink, "link " + std::to_string(id) + " is a loop");
    }
  }
}

VertexMap VertexMap::identity(int n) {
  VertexMap m;
  m.forward.resize(n);
  for (int v = 0; v < n; ++v) m.forward[v] = v;
  return m;
}

std::vector<Vertex> VertexMap::preimage(Vertex image) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < forward.size(); ++v) {
    if (forward[v] == image) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexMap VertexMap::compose(const VertexMap& then) const {
  VertexMap out;
  out.forward.resize(forward.size());
  Vertex max_image = -1;
  for (std::size_t v = 0; v < forward.size(); ++v) {
    Vertex mid = forward[v];
    out.forward[v] = mid < 0 ? -1 : then.forward[mid];
    max_image = std::max(max_image, out.forward[v]);
  }
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(max_image + 1));
  for (std::size_t v = 0; v < out.forward.size(); ++v) {
    if (out.forward[v] >= 0) groups[out.forward[v]].push_back(static_cast<Vertex>(v));
  }
  for (auto& g : groups) {
    if (g.size() >= 2) out.merged_groups.push_back(std::move(g));
  }
  return out;
}

std::vector<int> root_components(const Instance& instance) {
  const Cactus& g = instance.cactus();
  const int n = g.vertex_count();
  const Vertex r = instance.root();
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& cycle : g.cycles()) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex a = cycle[i];
      Vertex b = cycle[(i + 1) % cycle.size()];
      if (a == r || b == r) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (s == r || comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x]) {
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

LinkClass classify_link(const Instance& instance, const std::vector<int>& components,
                        const Link& link) {
  const Vertex r = instance.root();
  if (link.u == r || link.v == r) return LinkClass::Cross;
  return components[link.u] == components[link.v] ? LinkClass::In : LinkClass::Cross;
}

LinkClass classify_link(const Instance& instance, const Link& link) {
  return classify_link(instance, root_components(instance), link);
}

std::vector<LinkClass> classify_links(const Instance& instance) {
  const auto comp = root_components(instance);
  std::vector<LinkClass> out;
  out.reserve(instance.links().size());
  for (const Link& l : instance.links()) out.push_back(classify_link(instance, comp, l));
  return out;
}

bool is_leaf_to_leaf(const Instance& instance) {
  const Cactus& g = instance.cactus();
  return std::all_of(instance.links().begin(), instance.links().end(),
                     [&](const Link& l) { return g.is_leaf(l.u) && g.is_leaf(l.v); });
}

bool is_leaf_to_leaf_plus(const Instance& instance) {
  const Cactus& g = instance.cactus();
  const Vertex r = instance.root();
  auto ok = [&](Vertex v) { return v == r || g.is_leaf(v); };
  return std::all_of(instance.links().begin(), instance.links().end(),
                     [&](const Link& l) { return ok(l.u) && ok(l.v); });
}

int k_wideness(const Instance& instance) {
  const auto comp = root_components(instance);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> leaves(count, 0);
  for (Vertex v = 0; v < instance.vertex_count(); ++v) {
    if (comp[v] >= 0 && instance.cactus().is_leaf(v)) ++leaves[comp[v]];
  }
  return leaves.empty() ? 0 : *std::max_element(leaves.begin(), leaves.end());
}

std::vector<Subcactus> principal_subcacti(const Instance& instance) {
  const int n = instance.vertex_count();
  const Vertex r = instance.root();
  const auto comp = root_components(instance);
  const int count = *std::max_element(comp.begin(), comp.end()) + 1;

  std::vector<Subcactus> out;
  for (int c = 0; c < count; ++c) {
    VertexMap map;
    map.forward.assign(n, -1);
    VertexSet component(n);
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v == r || comp[v] == c) map.forward[v] = next++;
      if (comp[v] == c) component.set(v);
    }
    std::vector<std::vector<Vertex>> cycles;
    for (const auto& cycle : instance.cactus().cycles()) {
      bool inside = std::any_of(cycle.begin(), cycle.end(), [&](Vertex v) { return comp[v] == c; });
      if (!inside) continue;
      std::vector<Vertex> mapped;
      for (Vertex v : cycle) mapped.push_back(map.forward[v]);
      cycles.push_back(std::move(mapped));
    }
    const Vertex new_root = map.forward[r];
    std::vector<Link> links;
    std::vector<LinkId> origin;
    for (LinkId id = 0; id < instance.link_count(); ++id) {
      const Link& l = instance.link(id);
      bool in_u = comp[l.u] == c;
      bool in_v = comp[l.v] == c;
      if (!in_u && !in_v) continue;
      links.push_back({in_u ? map.forward[l.u] : new_root, in_v ? map.forward[l.v] : new_root});
      origin.push_back(id);
    }
    Instance sub(Cactus::validate(next, std::move(cycles)), std::move(links), new_root);
    out.push_back({std::move(component), {std::move(sub), std::move(map), std::move(origin)}});
  }
  return out;
}

}  // namespace cacap
