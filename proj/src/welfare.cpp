#include "lemons/welfare.hpp"

#include <algorithm>
#include <cmath>

namespace lemons {

namespace {

// Integrals of the three pieces of I(t) = int_0^1 |p*r + b - t| dr over a
// t-interval [lo, hi]. The integrand switches at t = b (signal always above
// the type) and t = b + p (always below); in between the zero crossing
// r* = (t-b)/p gives I = p(r*^2 - r* + 1/2).
double left_piece(double b, double p, double lo, double hi) {
  if (hi <= lo) return 0.0;
  return (b + p / 2.0) * (hi - lo) - (hi * hi - lo * lo) / 2.0;
}

double right_piece(double b, double p, double lo, double hi) {
  if (hi <= lo) return 0.0;
  return (hi * hi - lo * lo) / 2.0 - (b + p / 2.0) * (hi - lo);
}

double mid_piece(double b, double p, double lo, double hi) {
  if (hi <= lo || p == 0.0) return 0.0;
  const double ra = (lo - b) / p;
  const double rb = (hi - b) / p;
  const auto antideriv = [](double r) {
    return r * r * r / 3.0 - r * r / 2.0 + r / 2.0;
  };
  return p * p * (antideriv(rb) - antideriv(ra));
}

}  // namespace

double analytic_misinformation(double p, double q) {
  if (q >= 1.0 || p == 1.0) return 0.0;
  const double mass = 1.0 - q;
  const double e_disclosed = (1.0 + q) / 2.0;
  const double b = (1.0 - p) * e_disclosed;

  // True-signal branch: |w(theta) - theta| = (1-p)|e_disclosed - theta|;
  // e_disclosed is the midpoint of [q, 1], so the integral is (1-q)^2/4.
  const double true_branch = p * (1.0 - p) * mass * mass / 4.0;

  // Fake-signal branch: integrate I(t) over the pool, splitting at the
  // breakpoints b and b+p clamped into [q, 1].
  const double lo = q, hi = 1.0;
  const double cut1 = std::clamp(b, lo, hi);
  const double cut2 = std::clamp(b + p, lo, hi);
  const double fake_integral = left_piece(b, p, lo, cut1) +
                               mid_piece(b, p, cut1, cut2) +
                               right_piece(b, p, cut2, hi);
  const double fake_branch = (1.0 - p) * fake_integral;

  return (true_branch + fake_branch) / mass;
}

WelfareReport welfare_report(const DisclosureEquilibrium& eq) {
  WelfareReport report;
  const double mass = 1.0 - eq.q;
  report.dmv_profit = eq.c * mass;
  report.certification_spend = report.dmv_profit;
  // Nondisclosers sell at theta_hat. A discloser of type theta0 expects
  // W(theta0); averaging W over the pool gives
  // e_disclosed*(1-p+p^2) + p(1-p)/2, which is e_disclosed only at p = 1 or
  // q in {0,1} -- the willingness-to-pay rule weights the displayed value by
  // p regardless of whether it could have come from the pool.
  const double mean_disclosed_payment =
      eq.e_disclosed * (1.0 - eq.p + eq.p * eq.p) +
      eq.p * (1.0 - eq.p) / 2.0;
  report.seller_surplus_gross =
      eq.q * eq.theta_hat + mass * mean_disclosed_payment;
  report.buyer_misinformation = analytic_misinformation(eq.p, eq.q);
  report.fake_signal_rate = (1.0 - eq.p) * mass;
  report.trade_volume = 1.0;
  return report;
}

}  // namespace lemons
