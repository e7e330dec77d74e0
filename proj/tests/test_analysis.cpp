#include <cmath>

#include "cacap/analysis.hpp"
#include "cacap/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cacap;

TEST_SUITE("analysis") {
  TEST_CASE("g") {
    CHECK(g(0) == 0);
    CHECK(g(1) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(g(1) == doctest::Approx(0.6321206).epsilon(1e-7));
    CHECK_THROWS_AS(g(1.5), Error);
    CHECK_THROWS_AS(g(-0.1), Error);
    for (int i = 0; i <= 100; ++i) {
      for (int j = i; j <= 100; ++j) {
        const double a = i / 100.0;
        const double b = j / 100.0;
        CHECK(g((a + b) / 2) <= (g(a) + g(b)) / 2 + 1e-15);
      }
    }
  }

  TEST_CASE("gain") {
    for (int i = 0; i <= 10; ++i) CHECK(gain(i / 10.0, 0) == 0);
    CHECK(gain(1, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(gain(0.5, 0.7), Error);
    CHECK_THROWS_AS(gain(1.2, 0.1), Error);
    // At the seam both branch factors are e^{-λ/2} and 1 - λ/2: they differ
    // for λ > 0, so the function jumps there. Measure the jump.
    double worst = 0;
    for (int i = 1; i <= 100; ++i) {
      const double l = i / 100.0;
      const double base = l * (std::exp(-l / 2) - 1 + l / 2);
      worst = std::max(worst, std::abs(base * std::exp(-l / 2) - base * (1 - l / 2)));
    }
    MESSAGE("largest seam jump of gain on the λ grid: " << worst);
  }

  TEST_CASE("b-condition expression") {
    BCheckConfig cfg;
    CHECK(b_condition_value(cfg, {0, 0, 0, 0, 0}) == doctest::Approx(1 - cfg.b));
    const BPoint p{0.5, 0.8, 0.4, 0.3, 0.5};
    const double value = b_condition_value(cfg, p);
    const double b = cfg.b;
    const double lead = b / (0.8 - 0.4) * 0.8 * (std::exp(-0.4) - 1 + 0.4) * (1 - 0.8 + 0.4);
    const double expected = lead - 0.3 * (b - 1.0 / 3) - 0.1 * (2 * (b - 0.4) - 1.0 / 30) + 0.1 * (0.5 - b) +
                            0.4 * (1 - b);
    CHECK(value == doctest::Approx(expected).epsilon(1e-14));
    CHECK(b_condition_value(cfg, {0.5, 0.6, 0.6, 0.2, 0.3}) >= 0);  // lambda_w == eta: lead term is 0
    CHECK_THROWS_AS(b_condition_value(cfg, {0.1, 0.5, 0.3, 0.4, 0}), Error);
    CHECK_THROWS_AS(b_condition_value(cfg, {0.1, 0.5, 0.3, 0.2, 0}), Error);
  }

  TEST_CASE("b check") {
    BCheckConfig cfg;
    const auto r = verify_b(cfg);
    CHECK(r.min_value >= -1e-9);
    CHECK(r.argmin.lambda_v == r.argmin.s);
    // The reported minimum is attained at the reported point.
    CHECK(b_condition_value(cfg, r.argmin) == doctest::Approx(r.min_value).epsilon(1e-12));
    MESSAGE("b = 0.452 minimum " << r.min_value << " at lambda_w=" << r.argmin.lambda_w << " eta=" << r.argmin.eta
                                 << " s=" << r.argmin.s << " x=" << r.argmin.x_sv);

    BCheckConfig half;
    half.b = 0.5;
    half.refinement_rounds = 0;
    MESSAGE("b = 0.5 minimum " << verify_b(half).min_value);

    BCheckConfig coarse;
    coarse.grid_step = 1;
    coarse.refinement_rounds = 0;
    CHECK(std::isfinite(verify_b(coarse).min_value));
    BCheckConfig wrong;
    wrong.b = 0.6;
    CHECK_THROWS_AS(verify_b(wrong), Error);
  }

  TEST_CASE("the grid sweep matches a plain five-dimensional grid") {
    // Independent sweep over every coordinate at step 0.05, including x_sv.
    BCheckConfig cfg;
    cfg.grid_step = 0.05;
    cfg.refinement_rounds = 0;
    double plain = 1e9;
    const int n = 20;
    for (int lw = 0; lw <= n; ++lw) {
      for (int e = 0; e + 1 <= lw; ++e) {
        for (int s = 0; s <= e; ++s) {
          for (int x = 0; x <= n; ++x) {
            plain = std::min(plain, b_condition_value(cfg, {s / 20.0, lw / 20.0, e / 20.0, s / 20.0, x / 20.0}));
          }
        }
      }
    }
    CHECK(verify_b(cfg).min_value <= plain + 1e-12);
  }

  TEST_CASE("rho") {
    const auto r = compute_rho();
    CHECK(r.residual < 1e-12);
    CHECK(r.alpha_star > 0.4195);
    CHECK(r.alpha_star < 0.4210);
    CHECK(r.rho > 1.2898);
    CHECK(r.rho < 1.2900);
    CHECK(r.branch_gap < 1e-4);
    CHECK(2 * 0.452 == doctest::Approx(0.904).epsilon(1e-15));
    CHECK(std::abs(oracle::grid_rho(1e-3, 0.452) - r.rho) < 2e-3);
    // The rounded-coefficient equation.
    CHECK(std::abs(6 * r.rounded_root + 9 * r.rounded_root * std::exp(-r.rounded_root) - 5) < 1e-12);
    CHECK(rho_objective(r.alpha_star, r.alpha_star) == doctest::Approx(r.rho).epsilon(1e-12));
  }
}
