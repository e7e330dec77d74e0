#pragma once

#include <cstdint>

#include "cacap/instance.hpp"
#include "cacap/transforms.hpp"

namespace cacap {

/// The Fig. 3 style family: m towers hanging off a doubled top path, each
/// tower a mid vertex with two leaves a and b. Links: {j_a, j_b} for every
/// tower (ids 0..m-1), then the chain {j_b, (j+1)_a} (ids m..2m-2). Tower j
/// uses vertices 4(j-1) (top), +1 (mid), +2 (a), +3 (b); the root is tower
/// 1's top vertex. Throws DomainError for m < 2.
Instance gen_fig3(int m);

/// Vertex ids of tower `j` (1-based) in gen_fig3.
struct Fig3Tower {
  Vertex top, mid, a, b;
};
Fig3Tower fig3_tower(int j);

enum class EndpointRule { LeafToLeaf, LeafToLeafPlus, Any };

struct RandomProfile {
  int min_vertices = 4;
  int max_vertices = 10;
  /// Largest cycle length; 2 gives doubled trees (TAP instances).
  int max_cycle_length = 4;
  /// At most this many leaves per component of G - root; 0 = no cap.
  int k_cap = 0;
  int link_count = 5;
  EndpointRule rule = EndpointRule::LeafToLeaf;
  bool ensure_feasible = true;
  /// Reject draws that need more links than this to be feasible; 0 = no cap.
  int max_links = 0;
};

/// Deterministic in `seed`. Throws GenerationFailed after bounded retries.
Instance gen_random(const RandomProfile& profile, std::uint64_t seed);

/// A random spanning tree with links, as a TAP instance (doubled edges when
/// converted). Uses the same profile with cycle length 2.
TapInstance gen_random_tap(RandomProfile profile, std::uint64_t seed);

}  // namespace cacap
