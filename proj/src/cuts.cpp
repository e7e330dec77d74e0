#include "cacap/cuts.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cacap/error.hpp"

namespace cacap {

std::vector<Vertex> TwoCut::members() const {
  std::vector<Vertex> out;
  for (auto i = vertices.find_first(); i != VertexSet::npos; i = vertices.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

std::vector<TwoCut> enumerate_two_cuts(const Instance& instance) {
  const Cactus& g = instance.cactus();
  const auto root = static_cast<std::size_t>(instance.root());
  std::vector<TwoCut> out;
  for (int c = 0; c < g.cycle_count(); ++c) {
    const int len = static_cast<int>(g.cycle(c).size());
    std::vector<VertexSet> hanging;
    hanging.reserve(len);
    for (int p = 0; p < len; ++p) hanging.push_back(g.hanging_set(c, p));
    for (int i = 0; i < len; ++i) {
      // Removing edges i and j leaves positions i+1..j on one side.
      VertexSet side(g.vertex_count());
      for (int j = i + 1; j < len; ++j) {
        side |= hanging[j];
        TwoCut cut;
        cut.cycle = c;
        cut.first_edge = i;
        cut.second_edge = j;
        cut.vertices = side;
        if (cut.vertices.test(root)) cut.vertices.flip();
        out.push_back(std::move(cut));
      }
    }
  }
  return out;
}

CoverageIndex::CoverageIndex(const Instance& instance) : cuts(enumerate_two_cuts(instance)) {
  link_cover.reserve(instance.links().size());
  for (const Link& l : instance.links()) link_cover.push_back(pair_cover(l.u, l.v));
}

CutSet CoverageIndex::pair_cover(Vertex a, Vertex b) const {
  CutSet out(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (covers_pair(a, b, cuts[i])) out.set(i);
  }
  return out;
}

CutSet CoverageIndex::cover_of(std::span<const LinkId> ids) const {
  CutSet out(cuts.size());
  for (LinkId id : ids) out |= link_cover[id];
  return out;
}

Solution make_solution(const Instance& instance, std::vector<LinkId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (LinkId id : ids) {
    if (id < 0 || id >= instance.link_count()) {
      throw Error(ErrorCode::UnknownLinkId, "link id " + std::to_string(id));
    }
  }
  Solution s;
  const auto comp = root_components(instance);
  for (LinkId id : ids) {
    if (classify_link(instance, comp, instance.link(id)) == LinkClass::In) {
      ++s.in_count;
    } else {
      ++s.cross_count;
    }
  }
  s.link_ids = std::move(ids);
  return s;
}

CheckResult check_solution(const Instance& instance, std::span<const LinkId> ids) {
  CheckResult result;
  result.solution = make_solution(instance, {ids.begin(), ids.end()});
  for (auto& cut : enumerate_two_cuts(instance)) {
    bool covered = std::any_of(result.solution.link_ids.begin(), result.solution.link_ids.end(),
                               [&](LinkId id) { return covers(instance.link(id), cut); });
    if (!covered) {
      result.witness = std::move(cut);
      return result;
    }
  }
  result.feasible = true;
  return result;
}

bool three_edge_connected_with(const Instance& instance, std::span<const LinkId> ids) {
  const int n = instance.vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
  for (const auto& cycle : instance.cactus().cycles()) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex a = cycle[i];
      Vertex b = cycle[(i + 1) % cycle.size()];
      ++w[a][b];
      ++w[b][a];
    }
  }
  for (LinkId id : ids) {
    if (id < 0 || id >= instance.link_count()) {
      throw Error(ErrorCode::UnknownLinkId, "link id " + std::to_string(id));
    }
    const Link& l = instance.link(id);
    ++w[l.u][l.v];
    ++w[l.v][l.u];
  }

  // Stoer-Wagner on the weighted adjacency matrix.
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  long best = std::numeric_limits<long>::max();
  while (active.size() > 1) {
    const std::size_t m = active.size();
    std::vector<long> key(m, 0);
    std::vector<bool> added(m, false);
    std::size_t prev = 0;
    std::size_t last = 0;
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t sel = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (!added[i] && (sel == m || key[i] > key[sel])) sel = i;
      }
      added[sel] = true;
      if (step == m - 1) {
        best = std::min(best, key[sel]);
        last = sel;
      } else {
        prev = sel;
        for (std::size_t i = 0; i < m; ++i) {
          if (!added[i]) key[i] += w[active[sel]][active[i]];
        }
      }
    }
    const int s = active[prev];
    const int t = active[last];
    for (int i = 0; i < n; ++i) {
      w[s][i] += w[t][i];
      w[i][s] = w[s][i];
    }
    w[s][s] = 0;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return best >= 3;
}

std::vector<LinkId> all_link_ids(const Instance& instance) {
  std::vector<LinkId> ids(instance.links().size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<LinkId>(i);
  return ids;
}

}  // namespace cacap
