#include "cacap/completion.hpp"
#include "cacap/error.hpp"
#include "cacap/exact.hpp"
#include "cacap/matching.hpp"
#include "cacap/generators.hpp"
#include "cacap/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cacap;

TEST_SUITE("io") {
  TEST_CASE("instance files") {
    const auto f = parse_instance(R"({"n": 2, "cycles": [[0, 1]], "links": [[0, 1]]})");
    CHECK(f.instance.root() == 0);
    CHECK(f.instance.link_count() == 1);
    CHECK_FALSE(f.tap);

    const auto tap = parse_instance(R"({"kind": "tap", "n": 3, "edges": [[0, 1], [1, 2]], "links": [[0, 2]]})");
    REQUIRE(tap.tap);
    CHECK(tap.instance.cactus().cycle_count() == 2);
    CHECK(parse_instance(serialize_instance(tap)).tap->edges == tap.tap->edges);

    auto code = [](const std::string& text) {
      try {
        parse_instance(text);
      } catch (const Error& e) {
        return e.code();
      }
      return ErrorCode::BoundViolation;
    };
    CHECK(code(R"({"n": 2, "cycles": [[0]]})") == ErrorCode::DegenerateCycle);
    CHECK(code(R"({"n": 2, "cycles": [[0, 1]], "links": [[0]]})") == ErrorCode::ParseError);
    CHECK(code(R"({"n": 2, "cycles": [[0, "a"]]})") == ErrorCode::ParseError);
    CHECK(code(R"({"n": 2, "cycles": )") == ErrorCode::ParseError);
    CHECK(code(R"({"cycles": [[0, 1]]})") == ErrorCode::ParseError);
    CHECK(code(R"({"kind": "graph", "n": 2, "cycles": [[0, 1]]})") == ErrorCode::ParseError);
    CHECK(code(R"({"kind": "tap", "n": 3, "edges": [[0, 1], [1, 0]]})") == ErrorCode::NotATree);
  }

  TEST_CASE("instance round trips are exact") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const auto inst = gen_random(testing_support::small_profile(EndpointRule::Any, 12), seed);
      const auto text = serialize_instance(inst);
      const auto back = parse_instance(text);
      CHECK(back.instance == inst);
      CHECK(serialize_instance(back) == text);
    }
  }

  TEST_CASE("solution files") {
    SolutionFile s{"matching", {1, 4, 6}, 3, true, {{"leaves", 12}, {"added", 2}}};
    const auto text = serialize_solution(s);
    CHECK(parse_solution(text) == s);
    CHECK(serialize_solution(parse_solution(text)) == text);
    CHECK(*s.stat("added") == 2);
    CHECK_FALSE(s.stat("missing"));
    CHECK_THROWS_AS(parse_solution(R"({"algorithm": 1})"), Error);
  }
}

TEST_SUITE("generators") {
  TEST_CASE("tower family") {
    const auto f = gen_fig3(6);
    CHECK(f.cactus().cycle_count() == 23);
    CHECK(f.cactus().leaves().size() == 12);
    CHECK(f.link_count() == 11);
    CHECK(is_leaf_to_leaf(f));
    CHECK(is_leaf_to_leaf(gen_fig3(2)));
    CHECK_THROWS_AS(gen_fig3(1), Error);
  }

  TEST_CASE("naive completion against the optimum as the towers grow") {
    for (int m : {2, 4, 6, 8, 10}) {
      const auto fig = gen_fig3(m);
      const auto matching = max_cardinality_matching(fig, all_link_ids(fig));
      const auto rest = min_directed_cover(make_cover_problem(fig, uncovered_cuts(fig, matching.link_ids)));
      REQUIRE(rest.feasible);
      const int naive = matching.size() + static_cast<int>(rest.links.size());
      const int opt = brute_force_opt(fig).opt_value;
      CHECK(opt == m + 1);
      CHECK(naive == 2 * m - 1);
      MESSAGE("m=" << m << " naive=" << naive << " OPT=" << opt << " ratio=" << static_cast<double>(naive) / opt);
    }
  }

  TEST_CASE("random instances are deterministic and respect the profile") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto p = testing_support::small_profile(EndpointRule::LeafToLeaf, 14);
      p.k_cap = 4;
      const auto a = gen_random(p, seed);
      CHECK(serialize_instance(a) == serialize_instance(gen_random(p, seed)));
      CHECK(k_wideness(a) <= 4);
      CHECK(is_leaf_to_leaf(a));
      CHECK(a.link_count() <= 14);
      CHECK(check_solution(a, all_link_ids(a)).feasible);

      p.rule = EndpointRule::LeafToLeafPlus;
      CHECK(is_leaf_to_leaf_plus(gen_random(p, seed)));
      const auto tap = gen_random_tap(p, seed);
      CHECK(static_cast<int>(tap.edges.size()) == tap.vertex_count - 1);
      CHECK_NOTHROW(tap_to_cacap(tap));
    }
  }
}
