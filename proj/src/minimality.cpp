#include "cacap/minimality.hpp"

#include "cacap/error.hpp"
#include "cacap/exact.hpp"

namespace cacap {

std::vector<VertexPair> shadows(const Instance& instance, const Link& link) {
  const auto pass = instance.cactus().must_pass(link.u, link.v);
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < pass.size(); ++i) {
    for (std::size_t j = i + 1; j < pass.size(); ++j) out.emplace_back(pass[i], pass[j]);
  }
  return out;
}

std::vector<VertexPair> strict_shadows(const Instance& instance, const Link& link) {
  const VertexPair own{std::min(link.u, link.v), std::max(link.u, link.v)};
  std::vector<VertexPair> out;
  for (const auto& s : shadows(instance, link)) {
    if (s != own) out.push_back(s);
  }
  return out;
}

bool is_minimal_wrt(const Instance& instance, const CoverageIndex& index, LinkId l1, LinkId l2) {
  const CutSet& second = index.link_cover[l2];
  const CutSet both = index.link_cover[l1] | second;
  if (second == both) return false;
  for (const auto& [a, b] : strict_shadows(instance, instance.link(l1))) {
    if ((index.pair_cover(a, b) | second) == both) return false;
  }
  return true;
}

bool is_minimal_wrt(const Instance& instance, LinkId l1, LinkId l2) {
  return is_minimal_wrt(instance, CoverageIndex(instance), l1, l2);
}

bool is_weakly_cross_minimal(const Instance& instance, std::span<const LinkId> chosen) {
  const auto comp = root_components(instance);
  std::vector<LinkId> cross;
  for (LinkId id : chosen) {
    if (classify_link(instance, comp, instance.link(id)) == LinkClass::Cross) cross.push_back(id);
  }
  if (cross.size() < 2) return true;
  const CoverageIndex index(instance);
  for (LinkId a : cross) {
    for (LinkId b : cross) {
      if (a != b && !is_minimal_wrt(instance, index, a, b)) return false;
    }
  }
  return true;
}

WeakMinimalityReport weak_minimality_report(const Instance& instance, int link_budget) {
  ExactOptions o;
  o.link_budget = link_budget;
  o.enumerate_optima = true;
  const auto cert = brute_force_opt(instance, o);
  if (!cert.optima_complete) {
    throw Error(ErrorCode::BudgetExceeded, "too many optimal solutions to enumerate");
  }
  WeakMinimalityReport r;
  r.optimum_count = static_cast<int>(cert.all_optima.size());
  for (const auto& opt : cert.all_optima) {
    if (is_weakly_cross_minimal(instance, opt)) {
      if (r.weakly_minimal_count == 0) r.witness = opt;
      ++r.weakly_minimal_count;
    }
  }
  return r;
}

bool exists_weakly_minimal_optimum(const Instance& instance, int link_budget) {
  return weak_minimality_report(instance, link_budget).weakly_minimal_count > 0;
}

}  // namespace cacap
