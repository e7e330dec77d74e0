#pragma once

#include <cstdint>
#include <vector>

#include "cacap/generators.hpp"
#include "cacap/instance.hpp"

namespace testing_support {

inline cacap::Instance make(int n, std::vector<std::vector<cacap::Vertex>> cycles,
                            std::vector<cacap::Link> links = {}, cacap::Vertex root = 0) {
  return cacap::Instance(cacap::Cactus::validate(n, std::move(cycles)), std::move(links), root);
}

inline cacap::RandomProfile small_profile(cacap::EndpointRule rule, int max_links) {
  cacap::RandomProfile p;
  p.min_vertices = 4;
  p.max_vertices = 10;
  p.max_cycle_length = 4;
  p.link_count = max_links > 3 ? max_links - 3 : 1;
  p.rule = rule;
  p.ensure_feasible = true;
  p.max_links = max_links;
  return p;
}

/// Ids 0..count-1 chosen by the bits of `mask`.
inline std::vector<cacap::LinkId> ids_of(std::uint64_t mask, int count) {
  std::vector<cacap::LinkId> out;
  for (int i = 0; i < count; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

}  // namespace testing_support
