#include "cacap/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cacap/error.hpp"

namespace cacap {

Instance tap_to_cacap(const TapInstance& tap) {
  const int n = tap.vertex_count;
  if (n <= 0 || static_cast<int>(tap.edges.size()) != n - 1) {
    throw Error(ErrorCode::NotATree, "a tree on " + std::to_string(n) + " vertices needs " +
                                         std::to_string(std::max(n - 1, 0)) + " edges");
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<Vertex>> cycles;
  for (auto [a, b] : tap.edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw Error(ErrorCode::NotATree, "bad tree edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) throw Error(ErrorCode::NotATree, "tree edges contain a cycle");
    parent[ra] = rb;
    cycles.push_back({a, b});
  }
  return Instance(Cactus::validate(n, std::move(cycles)), tap.links, tap.root);
}

DerivedInstance contract_vertices(const Instance& instance, std::span<const Vertex> group) {
  const int n = instance.vertex_count();
  VertexSet in_group(n);
  for (Vertex v : group) in_group.set(v);
  const int kept = n - static_cast<int>(in_group.count());
  const Vertex super = kept;

  VertexMap map;
  map.forward.resize(n);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) map.forward[v] = in_group.test(v) ? super : next++;
  map.merged_groups.push_back(std::vector<Vertex>(group.begin(), group.end()));
  std::sort(map.merged_groups.back().begin(), map.merged_groups.back().end());

  std::vector<std::vector<Vertex>> cycles;
  for (const auto& cycle : instance.cactus().cycles()) {
    std::vector<Vertex> mapped;
    mapped.reserve(cycle.size());
    for (Vertex v : cycle) mapped.push_back(map.forward[v]);
    auto first = std::find(mapped.begin(), mapped.end(), super);
    if (first == mapped.end()) {
      cycles.push_back(std::move(mapped));
      continue;
    }
    std::rotate(mapped.begin(), first, mapped.end());
    // Each visit to the supernode closes one smaller cycle.
    std::vector<Vertex> piece;
    for (std::size_t i = 0; i <= mapped.size(); ++i) {
      if (i == mapped.size() || mapped[i] == super) {
        if (piece.size() >= 2) cycles.push_back(piece);
        piece.assign(1, super);
      } else {
        piece.push_back(mapped[i]);
      }
    }
  }

  std::vector<Link> links;
  std::vector<LinkId> origin;
  for (LinkId id = 0; id < instance.link_count(); ++id) {
    const Link& l = instance.link(id);
    Vertex a = map.forward[l.u];
    Vertex b = map.forward[l.v];
    if (a == b) continue;
    links.push_back({a, b});
    origin.push_back(id);
  }
  Instance out(Cactus::validate(kept + 1, std::move(cycles)), std::move(links),
               map.forward[instance.root()]);
  return {std::move(out), std::move(map), std::move(origin)};
}

SplitResult split_at(const Instance& instance, const VertexSet& cut) {
  const int n = instance.vertex_count();
  if (static_cast<int>(cut.size()) != n || cut.none() || cut.all()) {
    throw Error(ErrorCode::NotATwoCut, "cut must be a proper non-empty vertex subset");
  }
  int crossing = 0;
  for (const auto& cycle : instance.cactus().cycles()) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cut.test(cycle[i]) != cut.test(cycle[(i + 1) % cycle.size()])) ++crossing;
    }
  }
  if (crossing != 2) {
    throw Error(ErrorCode::NotATwoCut, std::to_string(crossing) + " cactus edges leave the set");
  }
  std::vector<Vertex> in;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) (cut.test(v) ? in : out).push_back(v);
  return {contract_vertices(instance, out), contract_vertices(instance, in)};
}

std::vector<Vertex> must_pass_vertices(const Cactus& cactus, Vertex u, Vertex v) {
  return cactus.must_pass(u, v);
}

DerivedInstance contract_link(const Instance& instance, const Link& link) {
  if (link.u == link.v) return contract_vertices(instance, std::vector<Vertex>{link.u});
  return contract_vertices(instance, instance.cactus().must_pass(link.u, link.v));
}

DerivedInstance residual_instance_in_order(const Instance& instance, std::span<const LinkId> order) {
  DerivedInstance cur{instance, VertexMap::identity(instance.vertex_count()), all_link_ids(instance)};
  for (LinkId id : order) {
    if (id < 0 || id >= instance.link_count()) {
      throw Error(ErrorCode::UnknownLinkId, "link id " + std::to_string(id));
    }
    auto at = std::find(cur.link_origin.begin(), cur.link_origin.end(), id);
    if (at == cur.link_origin.end()) continue;
    const Link& l = cur.instance.link(static_cast<LinkId>(at - cur.link_origin.begin()));
    DerivedInstance step = contract_link(cur.instance, l);
    std::vector<LinkId> origin;
    origin.reserve(step.link_origin.size());
    for (LinkId mid : step.link_origin) origin.push_back(cur.link_origin[mid]);
    cur = {std::move(step.instance), cur.vertices.compose(step.vertices), std::move(origin)};
  }
  return cur;
}

DerivedInstance residual_instance(const Instance& instance, std::vector<LinkId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return residual_instance_in_order(instance, ids);
}

Instance root_shadow_completion(const Instance& instance) {
  if (!is_leaf_to_leaf_plus(instance)) {
    throw Error(ErrorCode::NotLeafToLeafPlus, "root-shadow completion needs a leaf-to-leaf+ instance");
  }
  const Vertex r = instance.root();
  const auto comp = root_components(instance);
  std::set<std::pair<Vertex, Vertex>> present;
  auto key = [](Vertex a, Vertex b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  for (const Link& l : instance.links()) present.insert(key(l.u, l.v));
  std::vector<Link> links = instance.links();
  for (const Link& l : instance.links()) {
    if (classify_link(instance, comp, l) != LinkClass::Cross) continue;
    for (Vertex end : {l.u, l.v}) {
      if (end == r) continue;
      if (present.insert(key(end, r)).second) links.push_back({end, r});
    }
  }
  return Instance(instance.cactus(), std::move(links), r);
}

int non_leaf_endpoint_count(const Instance& instance) {
  VertexSet seen(instance.vertex_count());
  for (const Link& l : instance.links()) {
    for (Vertex v : {l.u, l.v}) {
      if (!instance.cactus().is_leaf(v)) seen.set(v);
    }
  }
  return static_cast<int>(seen.count());
}

LeafifyResult construct_x_and_leafify(const Instance& instance) {
  if (!check_solution(instance, all_link_ids(instance)).feasible) {
    throw Error(ErrorCode::InfeasibleInstance, "the full link set leaves a 2-cut uncovered");
  }
  const Cactus& g = instance.cactus();
  const int n = instance.vertex_count();
  std::vector<Vertex> non_leaf_endpoints;
  {
    VertexSet seen(n);
    for (const Link& l : instance.links()) {
      for (Vertex v : {l.u, l.v}) {
        if (!g.is_leaf(v)) seen.set(v);
      }
    }
    for (auto i = seen.find_first(); i != VertexSet::npos; i = seen.find_next(i)) {
      non_leaf_endpoints.push_back(static_cast<Vertex>(i));
    }
  }

  std::vector<LinkId> x;
  DerivedInstance cur{instance, VertexMap::identity(n), all_link_ids(instance)};
  const int max_rounds = static_cast<int>(non_leaf_endpoints.size());
  for (int round = 0;; ++round) {
    const int m = cur.instance.vertex_count();
    std::vector<int> group_size(m, 0);
    std::vector<bool> has_leaf(m, false);
    for (Vertex v = 0; v < n; ++v) {
      Vertex img = cur.vertices.forward[v];
      ++group_size[img];
      if (g.is_leaf(v)) has_leaf[img] = true;
    }
    std::vector<bool> linked(m, false);
    for (const Link& l : cur.instance.links()) linked[l.u] = linked[l.v] = true;

    Vertex pick = -1;
    for (Vertex v : non_leaf_endpoints) {
      if (group_size[cur.vertices.forward[v]] == 1) {
        pick = cur.vertices.forward[v];
        break;
      }
    }
    for (Vertex s = 0; pick < 0 && s < m; ++s) {
      if (group_size[s] >= 2 && !has_leaf[s] && linked[s]) pick = s;
    }
    if (pick < 0) break;
    if (round >= max_rounds) {
      throw Error(ErrorCode::BoundViolation, "supernode construction exceeded the endpoint budget");
    }

    // Lowest original link id among links at the picked vertex.
    LinkId chosen = -1;
    for (LinkId id = 0; id < cur.instance.link_count(); ++id) {
      if (cur.instance.link(id).touches(pick) &&
          (chosen < 0 || cur.link_origin[id] < cur.link_origin[chosen])) {
        chosen = id;
      }
    }
    x.push_back(cur.link_origin[chosen]);
    DerivedInstance step = contract_link(cur.instance, cur.instance.link(chosen));
    std::vector<LinkId> origin;
    for (LinkId mid : step.link_origin) origin.push_back(cur.link_origin[mid]);
    cur = {std::move(step.instance), cur.vertices.compose(step.vertices), std::move(origin)};
  }

  const Instance& residual = cur.instance;
  const int m = residual.vertex_count();
  std::vector<int> group_size(m, 0);
  for (Vertex v = 0; v < n; ++v) ++group_size[cur.vertices.forward[v]];
  std::vector<bool> linked(m, false);
  for (const Link& l : residual.links()) linked[l.u] = linked[l.v] = true;

  std::vector<Vertex> aux(m, -1);
  int next = m;
  auto cycles = residual.cactus().cycles();
  for (Vertex s = 0; s < m; ++s) {
    if (group_size[s] >= 2 && linked[s]) {
      aux[s] = next++;
      cycles.push_back({s, aux[s]});
    }
  }
  std::vector<Link> links;
  for (const Link& l : residual.links()) {
    links.push_back({aux[l.u] >= 0 ? aux[l.u] : l.u, aux[l.v] >= 0 ? aux[l.v] : l.v});
  }
  Instance tilde(Cactus::validate(next, std::move(cycles)), std::move(links), residual.root());
  DerivedInstance leafified{std::move(tilde), cur.vertices, cur.link_origin};
  return {std::move(x), std::move(cur), std::move(leafified)};
}

namespace {

std::vector<Vertex> normalise_cycle(std::vector<Vertex> cycle) {
  std::vector<Vertex> best;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t r = 0; r < cycle.size(); ++r) {
      std::vector<Vertex> cand(cycle.begin() + static_cast<std::ptrdiff_t>(r), cycle.end());
      cand.insert(cand.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

}  // namespace

std::string provenance_key(const DerivedInstance& derived) {
  const Instance& inst = derived.instance;
  const int m = inst.vertex_count();
  // Vertices without a preimage (auxiliary ones) are named past the original range.
  const auto original = static_cast<Vertex>(derived.vertices.forward.size());
  std::vector<Vertex> name(m, -1);
  for (std::size_t v = 0; v < derived.vertices.forward.size(); ++v) {
    Vertex img = derived.vertices.forward[v];
    if (img >= 0 && name[img] < 0) name[img] = static_cast<Vertex>(v);
  }
  for (Vertex w = 0, extra = 0; w < m; ++w) {
    if (name[w] < 0) name[w] = original + extra++;
  }

  std::vector<std::vector<Vertex>> cycles;
  for (const auto& cycle : inst.cactus().cycles()) {
    std::vector<Vertex> named;
    for (Vertex v : cycle) named.push_back(name[v]);
    cycles.push_back(normalise_cycle(std::move(named)));
  }
  std::sort(cycles.begin(), cycles.end());
  std::vector<std::tuple<LinkId, Vertex, Vertex>> links;
  for (LinkId id = 0; id < inst.link_count(); ++id) {
    Vertex a = name[inst.link(id).u];
    Vertex b = name[inst.link(id).v];
    links.emplace_back(derived.link_origin[id], std::min(a, b), std::max(a, b));
  }
  std::sort(links.begin(), links.end());

  std::vector<std::vector<Vertex>> groups;
  for (Vertex w = 0; w < m; ++w) {
    auto pre = derived.vertices.preimage(w);
    if (pre.size() >= 2) groups.push_back(std::move(pre));
  }
  std::sort(groups.begin(), groups.end());

  std::ostringstream out;
  out << "n=" << m << " root=" << name[inst.root()] << " cycles=";
  for (const auto& c : cycles) {
    out << '(';
    for (Vertex v : c) out << v << ' ';
    out << ')';
  }
  out << " groups=";
  for (const auto& gr : groups) {
    out << '{';
    for (Vertex v : gr) out << v << ' ';
    out << '}';
  }
  out << " links=";
  for (const auto& [id, a, b] : links) out << id << ':' << a << '-' << b << ' ';
  return out.str();
}

}  // namespace cacap
