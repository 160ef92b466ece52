#include "lemons/unraveling.hpp"

#include <algorithm>
#include <stdexcept>

namespace lemons {

namespace {

void check_iteration_args(double tol, int max_rounds) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tol must be positive");
  }
  if (max_rounds < 1) {
    throw std::invalid_argument("max_rounds must be >= 1");
  }
}

}  // namespace

double unravel_step(double cutoff, const MarketParams& params) {
  if (!(params.pi >= 0.5)) {
    throw std::domain_error("pi must be >= 0.5");
  }
  if (!(cutoff > 0.0 && cutoff <= 1.0)) {
    throw std::invalid_argument("cutoff must be in (0,1]");
  }
  return std::min(cutoff / (2.0 * params.pi), 1.0);
}

UnravelingTrace unravel_trace(const MarketParams& params, double tol,
                              int max_rounds) {
  check_iteration_args(tol, max_rounds);

  UnravelingTrace trace;
  double cutoff = 1.0;
  trace.cutoffs.push_back(cutoff);
  trace.buyer_offers.push_back(cutoff / 2.0);
  for (int n = 1; n <= max_rounds; ++n) {
    cutoff = unravel_step(cutoff, params);
    trace.cutoffs.push_back(cutoff);
    trace.buyer_offers.push_back(cutoff / 2.0);
    trace.rounds = n;
    if (cutoff < tol) {
      trace.converged = true;
      break;
    }
  }
  trace.limit = params.stationary_boundary() ? 1.0 : 0.0;
  return trace;
}

UnravelingTrace free_disclosure_unravel(double tol, int max_rounds) {
  check_iteration_args(tol, max_rounds);

  UnravelingTrace trace;
  double theta_hat = 0.5;
  trace.cutoffs.push_back(theta_hat);
  trace.buyer_offers.push_back(theta_hat / 2.0);
  for (int n = 1; n <= max_rounds; ++n) {
    theta_hat /= 2.0;
    trace.cutoffs.push_back(theta_hat);
    trace.buyer_offers.push_back(theta_hat / 2.0);
    trace.rounds = n;
    if (theta_hat < tol) {
      trace.converged = true;
      break;
    }
  }
  trace.limit = 0.0;
  return trace;
}

}  // namespace lemons
