#pragma once

#include <vector>

#include "lemons/market.hpp"

namespace lemons {

/// Trace of a recursive market-cutoff sequence. For the no-certification
/// game the cutoffs follow k_{n+1} = k_n / (2 pi) from k_0 = 1 and the
/// buyer's offer each round is half the current cutoff (uniform truncated
/// mean). For pi > 1/2 the sequence collapses to 0; at pi == 1/2 it is
/// stationary at 1.
struct UnravelingTrace {
  std::vector<double> cutoffs;       // k_0, k_1, ..., k_rounds
  std::vector<double> buyer_offers;  // offer_n = k_n / 2
  double limit = 0.0;
  int rounds = 0;                    // steps taken; cutoffs.size() == rounds + 1
  bool converged = false;
};

/// One round of exit: the buyer offers E(theta | theta <= cutoff) = cutoff/2
/// and sellers stay only if pi*theta <= cutoff/2. Returns min(cutoff/(2 pi), 1).
/// Throws std::domain_error for pi < 1/2.
double unravel_step(double cutoff, const MarketParams& params);

/// Iterates unravel_step from k_0 = 1 until the cutoff drops below tol or
/// max_rounds is exhausted. converged is true iff the tolerance was reached;
/// at pi == 1/2 the trace is stationary and converged stays false.
UnravelingTrace unravel_trace(const MarketParams& params, double tol = 1e-9,
                              int max_rounds = 200);

/// Free certificates: the nondisclosure pool mean halves each round,
/// theta_hat_{t+1} = theta_hat_t / 2 from theta_hat_0 = 1/2, so in the limit
/// only the lemons stay undisclosed.
UnravelingTrace free_disclosure_unravel(double tol = 1e-9, int max_rounds = 200);

}  // namespace lemons
