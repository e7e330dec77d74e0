#include "cacap/matching.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cacap/blossom.hpp"
#include "cacap/error.hpp"

namespace cacap {

VertexSet cut_terminal_set(const Instance& instance, const TwoCut& cut) {
  VertexSet out(instance.vertex_count());
  const Cactus& g = instance.cactus();
  for (const Link& l : instance.links()) {
    if (!covers(l, cut)) continue;
    Vertex inner = cut.contains(l.u) ? l.u : l.v;
    if (g.is_leaf(inner)) out.set(inner);
  }
  return out;
}

bool is_bad_witness(const Instance& instance, LinkId id, const TwoCut& witness) {
  const Link& l = instance.link(id);
  if (!witness.contains(l.u) || !witness.contains(l.v)) return false;
  VertexSet allowed(instance.vertex_count());
  allowed.set(l.u);
  allowed.set(l.v);
  return cut_terminal_set(instance, witness).is_subset_of(allowed);
}

std::vector<BadLink> bad_links_with_witness(const Instance& instance) {
  const auto cuts = enumerate_two_cuts(instance);
  std::vector<VertexSet> terminals;
  terminals.reserve(cuts.size());
  for (const auto& c : cuts) terminals.push_back(cut_terminal_set(instance, c));
  std::vector<BadLink> out;
  for (LinkId id = 0; id < instance.link_count(); ++id) {
    const Link& l = instance.link(id);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      if (!cuts[i].contains(l.u) || !cuts[i].contains(l.v)) continue;
      VertexSet rest = terminals[i];
      rest.reset(l.u);
      rest.reset(l.v);
      if (rest.none()) {
        out.push_back({id, cuts[i]});
        break;
      }
    }
  }
  return out;
}

std::vector<LinkId> bad_links(const Instance& instance) {
  std::vector<LinkId> out;
  for (const auto& b : bad_links_with_witness(instance)) out.push_back(b.id);
  return out;
}

std::vector<LinkId> eligible_links(const Instance& instance) {
  const Cactus& g = instance.cactus();
  std::vector<bool> bad(instance.link_count(), false);
  for (LinkId id : bad_links(instance)) bad[id] = true;
  std::vector<LinkId> out;
  for (LinkId id = 0; id < instance.link_count(); ++id) {
    const Link& l = instance.link(id);
    if (!bad[id] && g.is_leaf(l.u) && g.is_leaf(l.v)) out.push_back(id);
  }
  return out;
}

Matching make_matching(const Instance& instance, std::vector<LinkId> ids) {
  std::sort(ids.begin(), ids.end());
  Matching m;
  m.covered_leaves.resize(instance.vertex_count());
  const auto comp = root_components(instance);
  for (LinkId id : ids) {
    if (id < 0 || id >= instance.link_count()) {
      throw Error(ErrorCode::UnknownLinkId, "link id " + std::to_string(id));
    }
    const Link& l = instance.link(id);
    if (m.covered_leaves.test(l.u) || m.covered_leaves.test(l.v)) {
      throw Error(ErrorCode::InvalidLink, "matching links share an endpoint at link " + std::to_string(id));
    }
    m.covered_leaves.set(l.u);
    m.covered_leaves.set(l.v);
    if (classify_link(instance, comp, l) == LinkClass::In) {
      ++m.in_count;
    } else {
      ++m.cross_count;
    }
  }
  m.link_ids = std::move(ids);
  return m;
}

std::int64_t twice_matching_objective(const Instance& instance, const Matching& matching) {
  const auto leaves = static_cast<std::int64_t>(instance.cactus().leaves().size());
  return 2 * leaves - matching.scaled_weight();
}

namespace {

// Lexicographically smallest maximiser of the given link weights.
Matching lex_max_matching(const Instance& instance, std::span<const LinkId> candidates,
                          const std::function<std::int64_t(LinkId)>& weight) {
  std::vector<LinkId> pool(candidates.begin(), candidates.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<int> index(instance.vertex_count(), -1);
  int count = 0;
  for (LinkId id : pool) {
    for (Vertex v : {instance.link(id).u, instance.link(id).v}) {
      if (index[v] < 0) index[v] = count++;
    }
  }

  auto best_weight = [&](const std::vector<LinkId>& links, const VertexSet& blocked) {
    std::vector<WeightedEdge> edges;
    for (LinkId id : links) {
      const Link& l = instance.link(id);
      if (blocked.test(l.u) || blocked.test(l.v)) continue;
      edges.push_back({index[l.u], index[l.v], weight(id)});
    }
    const auto mate = max_weight_matching(count, edges);
    // Parallel links share endpoints, so sum over matched vertex pairs.
    std::int64_t total = 0;
    for (int v = 0; v < count; ++v) {
      if (mate[v] > v) {
        std::int64_t w = 0;
        for (const auto& e : edges) {
          if ((e.i == v && e.j == mate[v]) || (e.j == v && e.i == mate[v])) w = std::max(w, e.weight);
        }
        total += w;
      }
    }
    return total;
  };

  VertexSet blocked(instance.vertex_count());
  std::int64_t target = best_weight(pool, blocked);
  std::vector<LinkId> chosen;
  for (std::size_t k = 0; k < pool.size() && target > 0; ++k) {
    const LinkId id = pool[k];
    const Link& l = instance.link(id);
    if (blocked.test(l.u) || blocked.test(l.v) || weight(id) <= 0) continue;
    VertexSet trial = blocked;
    trial.set(l.u);
    trial.set(l.v);
    std::vector<LinkId> later(pool.begin() + static_cast<std::ptrdiff_t>(k) + 1, pool.end());
    const std::int64_t rest = best_weight(later, trial);
    if (weight(id) + rest == target) {
      chosen.push_back(id);
      blocked = std::move(trial);
      target = rest;
    }
  }
  return make_matching(instance, std::move(chosen));
}

}  // namespace

Matching max_weight_matching(const Instance& instance, std::span<const LinkId> candidates) {
  const auto comp = root_components(instance);
  return lex_max_matching(instance, candidates, [&](LinkId id) -> std::int64_t {
    return classify_link(instance, comp, instance.link(id)) == LinkClass::Cross ? 2 : 1;
  });
}

Matching max_weight_matching(const Instance& instance) {
  const auto eligible = eligible_links(instance);
  return max_weight_matching(instance, eligible);
}

Matching max_cardinality_matching(const Instance& instance, std::span<const LinkId> candidates) {
  return lex_max_matching(instance, candidates, [](LinkId) -> std::int64_t { return 1; });
}

}  // namespace cacap
