#pragma once

#include "lemons/equilibrium.hpp"

namespace lemons {

/// Surplus decomposition for one policy outcome. The components are reported
/// separately rather than aggregated into a single welfare scalar.
///
///   dmv_profit            fee revenue, c * disclosure mass
///   seller_surplus_gross  mean sale price across all sellers (before fees)
///   certification_spend   sellers' total fee outlay == dmv_profit
///   buyer_misinformation  E|w(s) - theta| per disclosed certificate
///   fake_signal_rate      (1-p) * disclosure mass
///   trade_volume          fraction of sellers trading (1 in this game:
///                         nondisclosers still sell at theta_hat)
struct WelfareReport {
  double dmv_profit = 0.0;
  double seller_surplus_gross = 0.0;
  double certification_spend = 0.0;
  double buyer_misinformation = 0.0;
  double fake_signal_rate = 0.0;
  double trade_volume = 0.0;
};

/// Analytic path: exact integrals under the uniform prior. A no-disclosure
/// equilibrium has disclosure mass 0, so misinformation and spend are 0.
WelfareReport welfare_report(const DisclosureEquilibrium& eq);

/// Mean absolute buyer error per disclosed certificate when the pool is
/// theta ~ U(q,1]: E over theta and the signal lottery of |w(s) - theta|,
/// where w(s) = p*s + (1-p)*(1+q)/2. Closed form (piecewise quadratic
/// segments integrated exactly); 0 for an empty pool or p = 1.
double analytic_misinformation(double p, double q);

}  // namespace lemons
