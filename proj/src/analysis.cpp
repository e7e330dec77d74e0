#include "cacap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cacap/error.hpp"

namespace cacap {

namespace {

constexpr double kSlack = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::DomainError, what);
}

void check_config(const BCheckConfig& cfg) {
  require(cfg.b >= 5.0 / 12.0 - kSlack && cfg.b <= 0.5 + kSlack, "b must lie in [5/12, 1/2]");
  require(cfg.grid_step > 0, "grid step must be positive");
  require(cfg.refinement_rounds >= 0, "refinement rounds must be non-negative");
  require(cfg.sv_low <= cfg.sv_high, "empty x_sv range");
}

// The expression without domain checks; `lead` is the gain term.
double condition_tail(double b, double eta, double s, double x_sv) {
  return -s * (b - 1.0 / 3.0) - (eta - s) * (2.0 * (b - 0.4) - 1.0 / 30.0) +
         std::max(0.0, x_sv - eta) * (0.5 - b) + std::max(0.0, 1.0 - x_sv - eta + s) * (1.0 - b);
}

double lead_term(double b, double lambda_w, double eta) {
  if (lambda_w <= 0.0 || lambda_w == eta) return 0.0;
  return b / (lambda_w - eta) * gain(lambda_w, eta);
}

// The tail is piecewise linear in x_sv with kinks at eta and 1 - eta + s,
// so its minimum over an interval sits at an end or a kink.
double min_tail_over_x(double b, double eta, double s, double lo, double hi, double& at) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : {lo, hi, eta, 1.0 - eta + s}) {
    if (x < lo || x > hi) continue;
    const double v = condition_tail(b, eta, s, x);
    if (v < best) {
      best = v;
      at = x;
    }
  }
  return best;
}

std::vector<double> axis(double lo, double hi, double step) {
  std::vector<double> out;
  if (hi < lo) return out;
  const auto count = static_cast<std::int64_t>(std::floor((hi - lo) / step + 1e-9));
  for (std::int64_t i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  if (hi - out.back() > 1e-9 * step) out.push_back(hi);
  return out;
}

}  // namespace

double g(double lambda) {
  require(lambda >= -kSlack && lambda <= 1.0 + kSlack, "g is defined on [0, 1]");
  return lambda * (1.0 - std::exp(-lambda));
}

double gain(double lambda, double eta) {
  require(eta >= -kSlack && eta <= lambda + kSlack && lambda <= 1.0 + kSlack, "gain needs 0 <= eta <= lambda <= 1");
  const double base = lambda * (std::exp(-eta) - 1.0 + eta);
  if (eta > 0.5 * lambda) return base * std::exp(-lambda + eta);
  return base * (1.0 - lambda + eta);
}

double b_condition_value(const BCheckConfig& cfg, const BPoint& p) {
  require(p.s >= -kSlack && p.s <= p.eta + kSlack && p.eta <= p.lambda_w + kSlack && p.lambda_w <= 1.0 + kSlack,
          "need 0 <= s <= eta <= lambda_w <= 1");
  require(p.s <= p.lambda_v + kSlack && p.lambda_v <= 1.0 + kSlack, "need s <= lambda_v <= 1");
  return lead_term(cfg.b, p.lambda_w, p.eta) + condition_tail(cfg.b, p.eta, p.s, p.x_sv);
}

BCheckResult verify_b(const BCheckConfig& cfg) {
  check_config(cfg);
  const double b = cfg.b;
  BCheckResult best;
  best.min_value = std::numeric_limits<double>::infinity();

  // One sweep over a box; x_sv is handled exactly by the piecewise-linear
  // minimum, the other coordinates by the grid. `gap` keeps eta off lambda_w.
  auto sweep = [&](double lw_lo, double lw_hi, double eta_lo, double eta_hi, double s_lo, double s_hi,
                   double step, double gap) {
    for (double lw : axis(std::max(0.0, lw_lo), std::min(1.0, lw_hi), step)) {
      for (double eta : axis(std::max(0.0, eta_lo), std::min(eta_hi, lw - gap), step)) {
        const double lead = lead_term(b, lw, eta);
        for (double s : axis(std::max(0.0, s_lo), std::min(s_hi, eta), step)) {
          double x = 0;
          const double v = lead + min_tail_over_x(b, eta, s, cfg.sv_low, cfg.sv_high, x);
          ++best.evaluations;
          if (v < best.min_value) {
            best.min_value = v;
            best.argmin = {s, lw, eta, s, x};
          }
        }
      }
    }
  };

  sweep(0.0, 1.0, 0.0, 1.0, 0.0, 1.0, cfg.grid_step, cfg.grid_step);
  double radius = cfg.grid_step;
  for (int round = 0; round < cfg.refinement_rounds; ++round) {
    const BPoint c = best.argmin;
    const double fine = radius / 10.0;
    sweep(c.lambda_w - radius, c.lambda_w + radius, c.eta - radius, c.eta + radius, c.s - radius, c.s + radius,
          fine, fine);
    radius = fine;
  }
  return best;
}

double rho_objective(double alpha, double lambda0, double b) {
  return std::min(1.5 - 0.5 * alpha, 1.0 + alpha - 2.0 * b * alpha * (1.0 - std::exp(-lambda0)));
}

RhoResult compute_rho(double b) {
  require(b >= 5.0 / 12.0 - kSlack && b <= 0.5 + kSlack, "b must lie in [5/12, 1/2]");
  auto bisect = [](const std::function<double(double)>& f) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
  };
  // Both branches are equal iff (3 - 4b)α + 4bα e^-α = 1; the left side is
  // increasing on [0, 1], negative at 0 and positive at 1.
  auto balance = [b](double a) { return (3.0 - 4.0 * b) * a + 4.0 * b * a * std::exp(-a) - 1.0; };
  auto rounded = [](double a) { return 6.0 * a + 9.0 * a * std::exp(-a) - 5.0; };

  RhoResult r;
  r.b = b;
  r.alpha_star = bisect(balance);
  r.residual = std::abs(balance(r.alpha_star));
  r.rho = 1.5 - 0.5 * r.alpha_star;
  const double second = 1.0 + r.alpha_star - 2.0 * b * r.alpha_star * (1.0 - std::exp(-r.alpha_star));
  r.branch_gap = std::abs(r.rho - second);
  r.rounded_root = bisect(rounded);
  r.rounded_rho = 1.5 - 0.5 * r.rounded_root;
  return r;
}

}  // namespace cacap
