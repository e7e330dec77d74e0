#include <random>

#include "cacap/completion.hpp"
#include "cacap/error.hpp"
#include "cacap/exact.hpp"
#include "cacap/generators.hpp"
#include "cacap/transforms.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

using namespace cacap;
using testing_support::make;

namespace {

Instance plus_instance(std::uint64_t seed, int max_links = 9) {
  return gen_random(testing_support::small_profile(EndpointRule::LeafToLeafPlus, max_links), seed);
}

}  // namespace

TEST_SUITE("completion") {
  TEST_CASE("uncovered cuts") {
    const auto fig = gen_fig3(4);
    CHECK(uncovered_cuts(fig, {}).size() == enumerate_two_cuts(fig).size());
    const auto all = all_link_ids(fig);
    CHECK(uncovered_cuts(fig, all).empty());
  }

  TEST_CASE("uncovered cuts match the residual instance") {
    std::mt19937_64 rng(23);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const auto inst = plus_instance(seed);
      const auto chosen = testing_support::ids_of(rng(), inst.link_count());
      CHECK(uncovered_cuts(inst, chosen).size() ==
            enumerate_two_cuts(residual_instance(inst, chosen).instance).size());
    }
  }

  TEST_CASE("directed covers on tiny problems") {
    const auto two = make(2, {{0, 1}}, {{0, 1}});
    const auto none = min_directed_cover(make_cover_problem(two, {}));
    CHECK(none.feasible);
    CHECK(none.links.empty());
    const auto one = min_directed_cover(make_cover_problem(two, enumerate_two_cuts(two)));
    CHECK(one.links == std::vector<LinkId>{0});
    CHECK(one.arcs.size() == 1);
    const auto bare = make(2, {{0, 1}});
    const auto fail = min_directed_cover(make_cover_problem(bare, enumerate_two_cuts(bare)));
    CHECK_FALSE(fail.feasible);
    CHECK(fail.witness);
  }

  TEST_CASE("arcs enter a cut at their head") {
    const auto inst = plus_instance(4);
    const auto p = make_cover_problem(inst, enumerate_two_cuts(inst));
    CHECK(p.arcs.size() == 2 * static_cast<std::size_t>(inst.link_count()));
    for (std::size_t c = 0; c < p.cuts.size(); ++c) {
      for (std::size_t a = 0; a < p.arcs.size(); ++a) {
        const bool enters = p.cuts[c].contains(p.arcs[a].head) && !p.cuts[c].contains(p.arcs[a].tail);
        const bool listed = std::find(p.entering[c].begin(), p.entering[c].end(), static_cast<int>(a)) !=
                            p.entering[c].end();
        CHECK(enters == listed);
      }
    }
  }

  TEST_CASE("directed covers are minimal and integral") {
    std::mt19937_64 rng(29);
    int checked = 0;
    for (std::uint64_t seed = 1; checked < 60 && seed < 400; ++seed) {
      const auto inst = gen_random(testing_support::small_profile(EndpointRule::Any, 8), seed);
      const auto chosen = testing_support::ids_of(rng(), inst.link_count());
      const auto p = make_cover_problem(inst, uncovered_cuts(inst, chosen));
      if (p.cuts.empty() || p.cuts.size() > 12) continue;
      const auto cover = min_directed_cover(p);
      REQUIRE(cover.feasible);
      const int arcs = static_cast<int>(p.arcs.size());
      CHECK(static_cast<int>(cover.arcs.size()) == *oracle::min_hitting_set(arcs, p.entering));
      CHECK(oracle::covering_lp_value(arcs, p.entering) == oracle::Rational(static_cast<int>(cover.arcs.size())));
      CHECK(cover.links.size() <= cover.arcs.size());
      ++checked;
    }
    CHECK(checked == 60);
  }

  TEST_CASE("the rational LP oracle sees fractional optima") {
    // A triangle of elements each covered by two of three sets: LP 3/2.
    const std::vector<std::vector<int>> rows{{0, 1}, {1, 2}, {0, 2}};
    CHECK(oracle::covering_lp_value(3, rows) == oracle::Rational(3, 2));
    CHECK(*oracle::min_hitting_set(3, rows) == 2);
  }

  TEST_CASE("completion on the tower family") {
    const auto fig = gen_fig3(6);
    const auto run = run_matching_algorithm(fig);
    CHECK(check_solution(fig, run.solution().link_ids).feasible);
    CHECK(run.solution().size() <= 10);
    CHECK(run.solution().size() == 7);
    CHECK(2 * run.completion.added.size() <= static_cast<std::size_t>(run.completion.twice_allowance));

    const auto two = make(2, {{0, 1}}, {{0, 1}});
    const auto tiny = run_matching_algorithm(two);
    CHECK(tiny.solution().link_ids == std::vector<LinkId>{0});
    CHECK(tiny.completion.added.empty());
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(run_matching_algorithm(make(3, {{0, 1, 2}}, {{1, 2}})), Error);
    CHECK_THROWS_AS(run_matching_algorithm(make(4, {{0, 1, 2}, {2, 3}}, {{2, 1}, {0, 3}})), Error);
  }

  TEST_CASE("matching algorithm guarantees on random instances") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
      const auto inst = plus_instance(seed);
      const auto run = run_matching_algorithm(inst);
      const auto& f = run.solution();
      CHECK(check_solution(inst, f.link_ids).feasible);
      CHECK(2 * static_cast<std::int64_t>(run.completion.added.size()) <= run.completion.twice_allowance);
      CHECK(2 * run.completion.arc_count <= run.completion.twice_allowance);
      CHECK(2 * f.size() <= *oracle::min_weighted_solution(inst, 3, 2));
      const int opt = oracle::opt(inst);
      CHECK(2 * f.size() <= 3 * opt + 1);
    }
  }
}
