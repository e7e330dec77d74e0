#include "cacap/cover.hpp"

#include <algorithm>
#include <limits>

#include "cacap/error.hpp"

namespace cacap {

namespace {

class CoverSearch {
 public:
  CoverSearch(const SetCoverProblem& p, const SetCoverOptions& o) : p_(p), o_(o) {
    const int m = static_cast<int>(p.sets.size());
    weight_.assign(m, 1);
    if (!p.weights.empty()) weight_ = p.weights;
    containing_.assign(p.element_count, ElementSet(m));
    for (int s = 0; s < m; ++s) {
      for (auto e = p.sets[s].find_first(); e != ElementSet::npos; e = p.sets[s].find_next(e)) {
        containing_[e].set(s);
      }
    }
  }

  SetCoverResult run() {
    SetCoverResult r;
    for (int e = 0; e < p_.element_count; ++e) {
      if (containing_[e].none()) {
        r.uncoverable = e;
        return r;
      }
    }
    const int m = static_cast<int>(p_.sets.size());
    ElementSet covered(p_.element_count);
    ElementSet excluded(m);
    std::vector<int> chosen;
    search(covered, excluded, chosen, 0);
    r.feasible = true;
    r.value = best_;
    r.chosen = best_set_;
    std::sort(r.chosen.begin(), r.chosen.end());
    r.nodes = nodes_;
    if (o_.enumerate_optima) {
      for (auto& s : optima_) std::sort(s.begin(), s.end());
      std::sort(optima_.begin(), optima_.end());
      r.optima = std::move(optima_);
      r.optima_complete = complete_;
    }
    return r;
  }

 private:
  std::int64_t lower_bound(const ElementSet& covered, const ElementSet& excluded) const {
    std::vector<std::pair<std::size_t, int>> order;
    for (int e = 0; e < p_.element_count; ++e) {
      if (!covered.test(e)) order.emplace_back((containing_[e] - excluded).count(), e);
    }
    std::sort(order.begin(), order.end());
    ElementSet used(p_.sets.size());
    std::int64_t bound = 0;
    for (const auto& [count, e] : order) {
      ElementSet cand = containing_[e] - excluded;
      if (cand.intersects(used)) continue;
      used |= cand;
      std::int64_t w = std::numeric_limits<std::int64_t>::max();
      for (auto s = cand.find_first(); s != ElementSet::npos; s = cand.find_next(s)) w = std::min(w, weight_[s]);
      bound += w;
    }
    return bound;
  }

  void search(const ElementSet& covered, ElementSet excluded, std::vector<int>& chosen, std::int64_t cost) {
    ++nodes_;
    if (o_.node_limit > 0 && nodes_ > o_.node_limit) {
      throw Error(ErrorCode::BudgetExceeded, "set cover search exceeded its node limit");
    }
    if (covered.count() == static_cast<std::size_t>(p_.element_count)) {
      record(chosen, cost);
      return;
    }
    const std::int64_t bound = cost + lower_bound(covered, excluded);
    if (o_.enumerate_optima ? bound > best_ : bound >= best_) return;

    int pick = -1;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (int e = 0; e < p_.element_count; ++e) {
      if (covered.test(e)) continue;
      const std::size_t c = (containing_[e] - excluded).count();
      if (c < fewest) {
        fewest = c;
        pick = e;
      }
    }
    if (fewest == 0) return;

    ElementSet cand = containing_[pick] - excluded;
    std::vector<int> branches;
    for (auto s = cand.find_first(); s != ElementSet::npos; s = cand.find_next(s)) branches.push_back(static_cast<int>(s));
    std::stable_sort(branches.begin(), branches.end(), [&](int a, int b) {
      if (weight_[a] != weight_[b]) return weight_[a] < weight_[b];
      return (p_.sets[a] - covered).count() > (p_.sets[b] - covered).count();
    });
    for (int s : branches) {
      chosen.push_back(s);
      search(covered | p_.sets[s], excluded, chosen, cost + weight_[s]);
      chosen.pop_back();
      excluded.set(s);
    }
  }

  void record(const std::vector<int>& chosen, std::int64_t cost) {
    if (cost < best_) {
      best_ = cost;
      best_set_ = chosen;
      optima_.clear();
      complete_ = true;
    }
    if (o_.enumerate_optima && cost == best_) {
      if (optima_.size() < o_.optimum_limit) {
        optima_.push_back(chosen);
      } else {
        complete_ = false;
      }
    }
  }

  const SetCoverProblem& p_;
  const SetCoverOptions& o_;
  std::vector<std::int64_t> weight_;
  std::vector<ElementSet> containing_;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_set_;
  std::vector<std::vector<int>> optima_;
  bool complete_ = true;
  std::int64_t nodes_ = 0;
};

}  // namespace

SetCoverResult solve_set_cover(const SetCoverProblem& problem, const SetCoverOptions& options) {
  return CoverSearch(problem, options).run();
}

}  // namespace cacap
