#pragma once

#include <cstdint>

namespace cacap {

/// λ(1 - e^-λ) on [0, 1]. Throws DomainError outside.
double g(double lambda);

/// Piecewise gain on 0 <= eta <= lambda <= 1, switching at eta = lambda / 2.
double gain(double lambda, double eta);

struct BCheckConfig {
  double b = 0.452;
  double grid_step = 0.01;
  int refinement_rounds = 2;
  double sv_low = 0.0;
  double sv_high = 1.0;
};

/// One point of the constrained domain: s <= eta <= lambda_w <= 1 and
/// s <= lambda_v <= 1, plus the covered fraction x_sv.
struct BPoint {
  double lambda_v = 0;
  double lambda_w = 0;
  double eta = 0;
  double s = 0;
  double x_sv = 0;
};

/// The expression that must stay non-negative for the stack rounding
/// guarantee. The gain term is taken as 0 when lambda_w == eta.
double b_condition_value(const BCheckConfig& cfg, const BPoint& p);

struct BCheckResult {
  double min_value = 0;
  BPoint argmin;
  std::int64_t evaluations = 0;
};

/// Grid sweep (eta kept at least one step below lambda_w) followed by
/// `refinement_rounds` finer sweeps around the running minimum. lambda_v
/// only enters through s <= lambda_v, so it is reported as s.
BCheckResult verify_b(const BCheckConfig& cfg);

/// min{3/2 - α/2, 1 + α - 2bα(1 - e^-λ)}.
double rho_objective(double alpha, double lambda0, double b = 0.452);

struct RhoResult {
  double b = 0.452;
  double alpha_star = 0;
  double rho = 0;
  /// |(3 - 4b)α + 4bα e^-α - 1| at alpha_star.
  double residual = 0;
  /// Difference of the two branches at alpha_star.
  double branch_gap = 0;
  /// Root of 6α + 9α e^-α = 5 (the same equality with b rounded to 0.45)
  /// and the ratio it gives.
  double rounded_root = 0;
  double rounded_rho = 0;
};

/// The two branches meet at λ = α; solves their equality by bisection.
RhoResult compute_rho(double b = 0.452);

}  // namespace cacap
