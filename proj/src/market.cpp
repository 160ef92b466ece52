#include "lemons/market.hpp"

#include <cmath>
#include <stdexcept>

namespace lemons {

MarketParams MarketParams::checked(double pi, bool allow_stationary_boundary) {
  if (!(pi >= 0.5) || !(pi <= 1.0)) {
    throw std::domain_error("pi must be in [0.5, 1]");
  }
  if (pi == 0.5 && !allow_stationary_boundary) {
    throw std::domain_error(
        "pi == 0.5 is the stationary boundary; pass allow_stationary_boundary");
  }
  return MarketParams{pi};
}

SellerType SellerType::checked(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("theta out of [0,1]");
  }
  return SellerType{theta};
}

SignalPolicy validate_policy(SignalPolicy policy) {
  if (!(policy.p >= 0.0 && policy.p <= 1.0)) {
    throw std::invalid_argument("p out of [0,1]");
  }
  if (!(policy.c >= 0.0)) {
    throw std::invalid_argument("c negative");
  }
  return policy;
}

TradePayoff trade_payoffs(double theta, double price, const MarketParams& params) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("theta out of [0,1]");
  }
  if (!(price >= 0.0)) {
    throw std::invalid_argument("price negative");
  }
  TradePayoff payoff;
  payoff.seller_sale = price;
  payoff.seller_no_sale = params.pi * theta;
  payoff.buyer_sale = theta - price;
  payoff.buyer_no_sale = 0.0;
  return payoff;
}

double truncated_mean_below(double k) {
  if (!(k > 0.0 && k <= 1.0)) {
    throw std::invalid_argument("truncation point must be in (0,1]");
  }
  return 0.5 * k;
}

}  // namespace lemons
