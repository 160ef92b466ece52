#pragma once

#include <cstdint>
#include <vector>

#include "lemons/equilibrium.hpp"
#include "lemons/unraveling.hpp"
#include "lemons/welfare.hpp"

namespace lemons {

/// Discrete-population Monte Carlo configuration. Defaults put the 95%
/// half-width on the profit estimate under 0.005.
struct SimulationConfig {
  int n_sellers = 100000;
  std::uint64_t seed = 0;
  int max_iterations = 500;
  double tol = 1e-9;
  double initial_theta_hat = 0.5;  // starting belief about nondisclosers
  int signal_draws_per_seller = 16;
};

/// Throws std::invalid_argument on out-of-range settings
/// (n_sellers >= 100, tol > 0, max_iterations >= 1, ...).
void validate_config(const SimulationConfig& config);

/// Outcome of synchronous best-response iteration on a sampled population.
struct DynamicsResult {
  double theta_hat = 0.0;       // final belief (mean of nondisclosers, 0 if none)
  double prev_theta_hat = 0.0;  // second-to-last iterate, for cycle diagnosis
  int iterations = 0;
  bool converged = false;
  Regime attractor = Regime::kInterior;
};

/// Samples n_sellers types U(0,1) and iterates: every seller best-responds
/// to the current belief theta_hat, then theta_hat is recomputed as the mean
/// of the realized nondisclosers (0 when the pool is empty). Stops when the
/// belief moves less than tol. For p > 1/2 this contracts to the unique
/// equilibrium; for p < 1/2 the attractor depends on initial_theta_hat.
/// Requires p > 0.
DynamicsResult best_response_dynamics(const SignalPolicy& policy,
                                      const SimulationConfig& config);

/// Per-decile payment statistics over disclosing sellers. predicted is
/// W evaluated at the bin's mean type using the realized pool mean, so the
/// comparison isolates signal-draw noise.
struct PaymentBin {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  std::int64_t draws = 0;
  double mean_payment = 0.0;
  double predicted = 0.0;
  double ci_half_width = 0.0;
};

struct CiHalfWidths {
  double theta_hat = 0.0;
  double q = 0.0;
  double dmv_profit = 0.0;
  double mean_payment = 0.0;
};

/// Empirical counterpart of the analytic equilibrium, produced by
/// simulate_market. Deterministic given (policy, config) including the seed.
struct SimulationReport {
  double p = 1.0;
  double c = 0.0;
  double theta_hat_emp = 0.0;
  double q_emp = 0.0;
  double e_disclosed_emp = 0.0;
  double mean_payment_emp = 0.0;       // per disclosed certificate
  double dmv_profit_emp = 0.0;         // c * realized disclosure fraction
  double dmv_profit_analytic = 0.0;    // c * (1-q) at the analytic equilibrium
  double abs_error = 0.0;
  int iterations = 0;
  bool converged = false;
  Regime attractor = Regime::kInterior;
  WelfareReport welfare;
  CiHalfWidths ci_half_width;
  std::vector<PaymentBin> payment_bins;  // 10 decile bins
  // config echo
  int n_sellers = 0;
  std::uint64_t seed = 0;
  double initial_theta_hat = 0.0;
  int signal_draws_per_seller = 0;
};

/// Runs the dynamics, then draws signal_draws_per_seller certificates per
/// disclosing seller and records the buyer's payment w(s) for each, filling
/// the report plus its welfare decomposition.
SimulationReport simulate_market(const SignalPolicy& policy,
                                 const SimulationConfig& config);

/// Returns the embedded decomposition (the op mirrors the analytic overload).
WelfareReport welfare_report(const SimulationReport& report);

/// Discrete no-certification market: each round the buyer offers the mean of
/// the remaining types and sellers with pi*theta above the offer exit.
/// Cutoffs are the observed maxima of the surviving pool and track
/// 1/(2 pi)^n. Requires pi > 1/2.
UnravelingTrace simulate_unraveling(const MarketParams& params, int rounds,
                                    int n_sellers, std::uint64_t seed);

}  // namespace lemons
