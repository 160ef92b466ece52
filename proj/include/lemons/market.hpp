#pragma once

#include <cstdint>

namespace lemons {

/// Comparison tolerance used throughout for "exact" analytic identities.
inline constexpr double kTol = 1e-12;

/// Shared market primitives. Quality types are uniform on [0,1]; a seller
/// who keeps the good retains pi * theta of its value. The unraveling
/// analysis needs pi > 1/2; pi == 1/2 is a stationary knife edge that must
/// be requested explicitly.
struct MarketParams {
  double pi = 0.75;

  /// Validating factory. Accepts pi in (1/2, 1]; pi == 1/2 only when
  /// allow_stationary_boundary is set. Throws std::domain_error otherwise.
  static MarketParams checked(double pi, bool allow_stationary_boundary = false);

  bool stationary_boundary() const { return pi == 0.5; }
};

// Naming note: `p` is reserved for the certificate's truth probability
// (SignalPolicy::p). Sale prices are always called `price`.

struct SellerType {
  double theta = 0.0;  // quality in [0,1]; 0 is a lemon, 1 is mint

  static SellerType checked(double theta);  // rejects theta outside [0,1]
};

/// The certification authority's instrument pair: the certificate shows the
/// true quality with probability p and an independent U(0,1) draw otherwise,
/// and costs the seller a fee c.
struct SignalPolicy {
  double p = 1.0;
  double c = 0.0;
};

/// Returns the policy unchanged if p is in [0,1] and c >= 0.
/// Throws std::invalid_argument naming the offending field.
SignalPolicy validate_policy(SignalPolicy policy);

/// One trade's payoff table. seller_no_sale is pi*theta exactly and
/// buyer_sale is theta - price exactly.
struct TradePayoff {
  double seller_sale = 0.0;
  double seller_no_sale = 0.0;
  double buyer_sale = 0.0;
  double buyer_no_sale = 0.0;
};

TradePayoff trade_payoffs(double theta, double price, const MarketParams& params);

/// Uniform prior helpers. E(theta) = 1/2, E(theta | theta <= k) = k/2.
constexpr double prior_mean() { return 0.5; }
double truncated_mean_below(double k);

}  // namespace lemons
