// Independent reference implementations used only by the tests. They share
// no code with the library beyond the data types.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cacap/instance.hpp"

namespace oracle {

using cacap::Instance;
using cacap::Link;
using cacap::LinkId;
using cacap::Vertex;
using Rational = boost::multiprecision::cpp_rational;

struct Edge {
  Vertex a, b;
};

inline std::vector<Edge> cactus_edges(const cacap::Cactus& g) {
  std::vector<Edge> out;
  for (const auto& c : g.cycles()) {
    for (std::size_t i = 0; i < c.size(); ++i) out.push_back({c[i], c[(i + 1) % c.size()]});
  }
  return out;
}

/// 2-cuts found by deleting every pair of edges and taking the part cut off
/// from the root, as sorted vertex lists.
inline std::vector<std::vector<Vertex>> two_cuts(const Instance& inst) {
  const int n = inst.vertex_count();
  const auto edges = cactus_edges(inst.cactus());
  std::set<std::vector<Vertex>> found;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::vector<bool> seen(n, false);
      std::vector<Vertex> stack{inst.root()};
      seen[inst.root()] = true;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (std::size_t k = 0; k < edges.size(); ++k) {
          if (k == i || k == j) continue;
          Vertex w = -1;
          if (edges[k].a == v) w = edges[k].b;
          if (edges[k].b == v) w = edges[k].a;
          if (w >= 0 && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      std::vector<Vertex> side;
      for (Vertex v = 0; v < n; ++v) {
        if (!seen[v]) side.push_back(v);
      }
      if (side.empty()) continue;
      // Only pairs that really disconnect, with exactly these two edges leaving.
      int leaving = 0;
      for (const auto& e : edges) leaving += (seen[e.a] != seen[e.b]) ? 1 : 0;
      if (leaving == 2) found.insert(side);
    }
  }
  return {found.begin(), found.end()};
}

inline bool inside(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline bool crosses(const Link& l, const std::vector<Vertex>& cut) { return inside(cut, l.u) != inside(cut, l.v); }

/// Cut-by-link incidence as 64-bit masks over links (at most 64 links).
inline std::vector<std::uint64_t> cut_masks(const Instance& inst) {
  std::vector<std::uint64_t> out;
  for (const auto& cut : two_cuts(inst)) {
    std::uint64_t m = 0;
    for (LinkId id = 0; id < inst.link_count(); ++id) {
      if (crosses(inst.link(id), cut)) m |= std::uint64_t{1} << id;
    }
    out.push_back(m);
  }
  return out;
}

inline bool feasible_mask(const std::vector<std::uint64_t>& masks, std::uint64_t chosen) {
  return std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & chosen) != 0; });
}

/// Component of G - root for every vertex (-1 for the root), by BFS over edges.
inline std::vector<int> components(const Instance& inst) {
  const int n = inst.vertex_count();
  const auto edges = cactus_edges(inst.cactus());
  std::vector<int> comp(n, -2);
  comp[inst.root()] = -1;
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -2) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        Vertex w = e.a == v ? e.b : (e.b == v ? e.a : -1);
        if (w >= 0 && comp[w] == -2) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool is_cross(const Instance& inst, const std::vector<int>& comp, const Link& l) {
  return l.u == inst.root() || l.v == inst.root() || comp[l.u] != comp[l.v];
}

/// Exhaustive minimum of sum of weights over feasible link subsets, or
/// nullopt if none is feasible.
inline std::optional<std::int64_t> min_weighted_solution(const Instance& inst, std::int64_t in_w,
                                                         std::int64_t cross_w) {
  const int m = inst.link_count();
  const auto masks = cut_masks(inst);
  const auto comp = components(inst);
  std::vector<std::int64_t> w(m);
  for (LinkId id = 0; id < m; ++id) w[id] = is_cross(inst, comp, inst.link(id)) ? cross_w : in_w;
  std::optional<std::int64_t> best;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    if (!feasible_mask(masks, s)) continue;
    std::int64_t total = 0;
    for (int id = 0; id < m; ++id) {
      if (s >> id & 1) total += w[id];
    }
    if (!best || total < *best) best = total;
  }
  return best;
}

inline int opt(const Instance& inst) { return static_cast<int>(*min_weighted_solution(inst, 1, 1)); }

/// Every minimum-cardinality feasible subset.
inline std::vector<std::vector<LinkId>> all_optima(const Instance& inst) {
  const int m = inst.link_count();
  const auto masks = cut_masks(inst);
  int best = std::numeric_limits<int>::max();
  std::vector<std::vector<LinkId>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const int size = std::popcount(s);
    if (size > best || !feasible_mask(masks, s)) continue;
    if (size < best) {
      best = size;
      out.clear();
    }
    std::vector<LinkId> ids;
    for (int id = 0; id < m; ++id) {
      if (s >> id & 1) ids.push_back(id);
    }
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Maximum total weight of a set of pairwise vertex-disjoint candidates.
inline std::int64_t max_matching_weight(const Instance& inst, const std::vector<LinkId>& candidates,
                                        const std::function<std::int64_t(LinkId)>& weight) {
  std::function<std::int64_t(std::size_t, std::vector<bool>&)> go = [&](std::size_t k, std::vector<bool>& used) {
    if (k == candidates.size()) return std::int64_t{0};
    std::int64_t best = go(k + 1, used);
    const Link& l = inst.link(candidates[k]);
    if (!used[l.u] && !used[l.v]) {
      used[l.u] = used[l.v] = true;
      best = std::max(best, weight(candidates[k]) + go(k + 1, used));
      used[l.u] = used[l.v] = false;
    }
    return best;
  };
  std::vector<bool> used(inst.vertex_count(), false);
  return go(0, used);
}

/// Vertices on every simple u-v path, by enumerating all simple paths.
inline std::vector<Vertex> must_pass(const cacap::Cactus& g, Vertex u, Vertex v) {
  const auto edges = cactus_edges(g);
  const int n = g.vertex_count();
  std::vector<int> hits(n, 0);
  int paths = 0;
  std::vector<bool> on(n, false);
  std::vector<Vertex> path{u};
  on[u] = true;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (x == v) {
      ++paths;
      for (Vertex p : path) ++hits[p];
      return;
    }
    std::set<Vertex> next;
    for (const auto& e : edges) {
      if (e.a == x) next.insert(e.b);
      if (e.b == x) next.insert(e.a);
    }
    for (Vertex w : next) {
      if (on[w]) continue;
      on[w] = true;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = false;
    }
  };
  dfs(u);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n; ++x) {
    if (paths > 0 && hits[x] == paths) out.push_back(x);
  }
  return out;
}

/// Bad links straight from the definition, over the oracle's cuts.
inline std::vector<LinkId> bad_links(const Instance& inst) {
  const auto cuts = two_cuts(inst);
  std::vector<LinkId> out;
  for (LinkId id = 0; id < inst.link_count(); ++id) {
    const Link& l = inst.link(id);
    for (const auto& cut : cuts) {
      if (!inside(cut, l.u) || !inside(cut, l.v)) continue;
      bool ok = true;
      for (const Link& other : inst.links()) {
        if (!crosses(other, cut)) continue;
        const Vertex in = inside(cut, other.u) ? other.u : other.v;
        if (inst.cactus().is_leaf(in) && in != l.u && in != l.v) ok = false;
      }
      if (ok) {
        out.push_back(id);
        break;
      }
    }
  }
  return out;
}

/// Minimum number of arcs hitting every row (each row lists its arcs), by
/// trying all arc subsets. At most 24 arcs.
inline std::optional<int> min_hitting_set(int arc_count, const std::vector<std::vector<int>>& rows) {
  std::vector<std::uint32_t> masks;
  for (const auto& r : rows) {
    std::uint32_t m = 0;
    for (int a : r) m |= 1u << a;
    masks.push_back(m);
  }
  std::optional<int> best;
  for (std::uint32_t s = 0; s < (1u << arc_count); ++s) {
    const int size = std::popcount(s);
    if (best && size >= *best) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & s) != 0; })) best = size;
  }
  return best;
}

/// Optimum of min{1.x : A x >= 1, x >= 0} where row i of A marks `rows[i]`,
/// computed exactly as the dual max{1.y : A^T y <= 1, y >= 0} with a dense
/// rational tableau and Bland's rule. Assumes every row is non-empty.
inline Rational covering_lp_value(int arc_count, const std::vector<std::vector<int>>& rows) {
  const int k = static_cast<int>(rows.size());  // dual variables
  const int m = arc_count;                      // dual constraints
  const int cols = k + m;                       // plus one slack per constraint
  // tableau[r] = coefficients, rhs at index cols.
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1, 0));
  for (int i = 0; i < k; ++i) {
    for (int a : rows[i]) t[a][i] = 1;
  }
  for (int r = 0; r < m; ++r) {
    t[r][k + r] = 1;
    t[r][cols] = 1;
  }
  std::vector<Rational> obj(cols + 1, 0);  // reduced costs c_j - z_j, value at cols (negated)
  for (int i = 0; i < k; ++i) obj[i] = 1;
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = k + r;
  while (true) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][enter];
      if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw std::runtime_error("unbounded dual: a cut has no entering arc");
    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (int j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    const Rational f = obj[enter];
    for (int j = 0; j <= cols; ++j) obj[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  return -obj[cols];
}

/// max over a grid of min{3/2 - a/2, 1 + a - 2b a (1 - e^-l)} with a <= l.
inline double grid_rho(double step, double b) {
  double best = -1;
  const int count = static_cast<int>(std::lround(1.0 / step));
  for (int i = 0; i <= count; ++i) {
    const double a = i * step;
    for (int j = i; j <= count; ++j) {
      const double l = j * step;
      const double v = std::min(1.5 - 0.5 * a, 1.0 + a - 2.0 * b * a * (1.0 - std::exp(-l)));
      best = std::max(best, v);
    }
  }
  return best;
}

}  // namespace oracle
