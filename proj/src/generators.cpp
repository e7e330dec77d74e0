#include "cacap/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "cacap/cuts.hpp"
#include "cacap/error.hpp"

namespace cacap {

namespace {

// Portable draws: the standard distributions differ between libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  int between(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(between(0, static_cast<int>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

struct Grown {
  int n = 1;
  std::vector<std::vector<Vertex>> cycles;
};

// Attaches cycles one at a time, keeping the leaf count of every component
// of G - root within the cap.
Grown grow_cactus(const RandomProfile& p, Draw& draw) {
  const int target = draw.between(std::max(2, p.min_vertices), std::max(2, p.max_vertices));
  Grown out;
  std::vector<int> comp{-1};
  std::vector<int> cycle_count{0};
  std::vector<int> comp_leaves;
  int stalls = 0;
  while (out.n < target && stalls < 1000) {
    const int len = draw.between(2, std::max(2, std::min(p.max_cycle_length, target - out.n + 1)));
    const Vertex at = draw.between(0, out.n - 1);
    const int fresh = len - 1;
    if (p.k_cap > 0) {
      int leaves = fresh;
      if (at != 0) {
        leaves += comp_leaves[comp[at]] - (cycle_count[at] == 1 ? 1 : 0);
      }
      if (leaves > p.k_cap) {
        ++stalls;
        continue;
      }
    }
    int c = 0;
    if (at == 0) {
      c = static_cast<int>(comp_leaves.size());
      comp_leaves.push_back(0);
    } else {
      c = comp[at];
      if (cycle_count[at] == 1) --comp_leaves[c];
    }
    std::vector<Vertex> cycle{at};
    for (int i = 0; i < fresh; ++i) {
      cycle.push_back(out.n);
      comp.push_back(c);
      cycle_count.push_back(1);
      ++out.n;
    }
    comp_leaves[c] += fresh;
    ++cycle_count[at];
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Vertex> endpoint_pool(const Instance& inst, EndpointRule rule) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    const bool leaf = inst.cactus().is_leaf(v);
    if (rule == EndpointRule::Any || leaf || (rule == EndpointRule::LeafToLeafPlus && v == inst.root())) {
      pool.push_back(v);
    }
  }
  return pool;
}

// A link covering `cut` that respects the endpoint rule, or {-1, -1}.
Link repair_link(const Instance& inst, const TwoCut& cut, EndpointRule rule, Draw& draw) {
  std::vector<Vertex> inside;
  std::vector<Vertex> outside;
  for (Vertex v : endpoint_pool(inst, rule)) (cut.contains(v) ? inside : outside).push_back(v);
  if (rule == EndpointRule::LeafToLeafPlus) outside = {inst.root()};
  if (inside.empty() || outside.empty()) return {-1, -1};
  return {draw.pick(inside), draw.pick(outside)};
}

}  // namespace

Fig3Tower fig3_tower(int j) {
  const Vertex base = 4 * (j - 1);
  return {base, base + 1, base + 2, base + 3};
}

Instance gen_fig3(int m) {
  if (m < 2) throw Error(ErrorCode::DomainError, "the tower family needs m >= 2");
  std::vector<std::vector<Vertex>> cycles;
  for (int j = 1; j <= m; ++j) {
    const auto t = fig3_tower(j);
    if (j < m) cycles.push_back({t.top, fig3_tower(j + 1).top});
    cycles.push_back({t.top, t.mid});
    cycles.push_back({t.mid, t.a});
    cycles.push_back({t.mid, t.b});
  }
  std::vector<Link> links;
  for (int j = 1; j <= m; ++j) links.push_back({fig3_tower(j).a, fig3_tower(j).b});
  for (int j = 1; j < m; ++j) links.push_back({fig3_tower(j).b, fig3_tower(j + 1).a});
  return Instance(Cactus::validate(4 * m, std::move(cycles)), std::move(links), 0);
}

Instance gen_random(const RandomProfile& profile, std::uint64_t seed) {
  if (profile.max_cycle_length < 2 || profile.link_count < 0 || profile.max_vertices < 2) {
    throw Error(ErrorCode::DomainError, "invalid random profile");
  }
  Draw draw(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Grown grown = grow_cactus(profile, draw);
    Instance bare(Cactus::validate(grown.n, grown.cycles), {}, 0);
    const auto pool = endpoint_pool(bare, profile.rule);
    std::vector<Link> links;
    std::set<std::pair<Vertex, Vertex>> seen;
    const std::size_t possible = pool.size() * (pool.size() - 1) / 2;
    for (int tries = 0; static_cast<int>(links.size()) < profile.link_count && tries < 50 * (profile.link_count + 1);
         ++tries) {
      if (pool.size() < 2) break;
      Vertex a = draw.pick(pool);
      Vertex b = draw.pick(pool);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      if (seen.size() < possible && !seen.insert({a, b}).second) continue;
      links.push_back({a, b});
    }
    Instance inst(bare.cactus(), links, 0);
    bool ok = true;
    if (profile.ensure_feasible) {
      for (int guard = 0; guard < 4 * grown.n * grown.n; ++guard) {
        auto check = check_solution(inst, all_link_ids(inst));
        if (check.feasible) break;
        Link fix = repair_link(inst, *check.witness, profile.rule, draw);
        if (fix.u < 0) {
          ok = false;
          break;
        }
        links.push_back(fix);
        inst = Instance(bare.cactus(), links, 0);
      }
      ok = ok && check_solution(inst, all_link_ids(inst)).feasible;
    }
    if (profile.max_links > 0 && inst.link_count() > profile.max_links) ok = false;
    if (ok) return inst;
  }
  throw Error(ErrorCode::GenerationFailed, "no instance satisfied the profile after 200 attempts");
}

TapInstance gen_random_tap(RandomProfile profile, std::uint64_t seed) {
  profile.max_cycle_length = 2;
  const Instance inst = gen_random(profile, seed);
  TapInstance tap;
  tap.vertex_count = inst.vertex_count();
  for (const auto& c : inst.cactus().cycles()) tap.edges.emplace_back(c[0], c[1]);
  tap.links = inst.links();
  tap.root = inst.root();
  return tap;
}

}  // namespace cacap
