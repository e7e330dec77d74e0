#include "cacap/cactus.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "cacap/error.hpp"

namespace cacap {

namespace {

std::string cycle_text(const std::vector<Vertex>& cycle) {
  std::string out = "[";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(cycle[i]);
  }
  return out + "]";
}

}  // namespace

Cactus Cactus::validate(int vertex_count, std::vector<std::vector<Vertex>> cycles) {
  if (vertex_count <= 0) {
    throw Error(ErrorCode::Disconnected, "a cactus needs at least one vertex");
  }
  Cactus c;
  c.vertex_count_ = vertex_count;
  c.cycles_at_.assign(vertex_count, {});

  std::size_t incidences = 0;
  for (std::size_t id = 0; id < cycles.size(); ++id) {
    const auto& cycle = cycles[id];
    if (cycle.size() < 2) {
      throw Error(ErrorCode::DegenerateCycle,
                  "cycle " + std::to_string(id) + " " + cycle_text(cycle) + " has fewer than 2 vertices");
    }
    for (Vertex v : cycle) {
      if (v < 0 || v >= vertex_count) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "cycle " + std::to_string(id) + " uses vertex " + std::to_string(v));
      }
    }
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::DegenerateCycle,
                  "cycle " + std::to_string(id) + " " + cycle_text(cycle) + " repeats a vertex");
    }
    for (Vertex v : cycle) c.cycles_at_[v].push_back(static_cast<int>(id));
    incidences += cycle.size();
  }

  // Two cycles sharing two vertices put an edge in two cycles; report them by name.
  std::map<std::pair<int, int>, int> shared;
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& at = c.cycles_at_[v];
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        if (++shared[{at[i], at[j]}] >= 2) {
          throw Error(ErrorCode::EdgeInTwoCycles,
                      "cycles " + std::to_string(at[i]) + " and " + std::to_string(at[j]) +
                          " share two or more vertices");
        }
      }
    }
  }

  // Vertex/cycle incidence graph: connected and acyclic iff the cycles are the blocks.
  const int n = vertex_count;
  const int nodes = n + static_cast<int>(cycles.size());
  c.cycles_ = std::move(cycles);
  c.tree_parent_.assign(nodes, -1);
  c.tree_depth_.assign(nodes, -1);
  std::vector<int> order;
  order.reserve(nodes);
  std::queue<int> queue;
  queue.push(0);
  c.tree_depth_[0] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    order.push_back(x);
    auto visit = [&](int y) {
      if (c.tree_depth_[y] < 0) {
        c.tree_depth_[y] = c.tree_depth_[x] + 1;
        c.tree_parent_[y] = x;
        queue.push(y);
      }
    };
    if (x < n) {
      for (int cyc : c.cycles_at_[x]) visit(n + cyc);
    } else {
      for (Vertex v : c.cycles_[x - n]) visit(v);
    }
  }
  if (static_cast<int>(order.size()) != nodes) {
    for (int x = 0; x < nodes; ++x) {
      if (c.tree_depth_[x] < 0) {
        std::string what = x < n ? "vertex " + std::to_string(x) : "cycle " + std::to_string(x - n);
        throw Error(ErrorCode::Disconnected, what + " is not reachable from vertex 0");
      }
    }
  }
  if (incidences != static_cast<std::size_t>(nodes - 1)) {
    throw Error(ErrorCode::EdgeInTwoCycles, "the listed cycles close a larger cycle");
  }

  c.subtree_.assign(nodes, VertexSet(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    if (x < n) c.subtree_[x].set(x);
    if (c.tree_parent_[x] >= 0) c.subtree_[c.tree_parent_[x]] |= c.subtree_[x];
  }
  return c;
}

std::vector<Vertex> Cactus::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

VertexSet Cactus::leaf_set() const {
  VertexSet out(vertex_count_);
  for (Vertex v = 0; v < vertex_count_; ++v) {
    if (is_leaf(v)) out.set(v);
  }
  return out;
}

std::vector<Vertex> Cactus::must_pass(Vertex u, Vertex v) const {
  std::vector<Vertex> out;
  int a = u;
  int b = v;
  while (a != b) {
    if (tree_depth_[a] >= tree_depth_[b]) {
      if (a < vertex_count_) out.push_back(a);
      a = tree_parent_[a];
    } else {
      if (b < vertex_count_) out.push_back(b);
      b = tree_parent_[b];
    }
  }
  if (a < vertex_count_) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Cactus::hanging_set(int cycle_id, int pos) const {
  const Vertex x = cycles_[cycle_id][pos];
  const int node = node_of_cycle(cycle_id);
  if (tree_parent_[x] == node) return subtree_[x];
  VertexSet out = subtree_[node];
  out.flip();
  return out;
}

}  // namespace cacap
