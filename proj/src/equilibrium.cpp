#include "lemons/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lemons/textio.hpp"

namespace lemons {

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::kAllDiscloseCorner: return "all-disclose-corner";
    case Regime::kInterior: return "interior";
    case Regime::kNoDisclosure: return "no-disclosure";
    case Regime::kDegenerateP0: return "degenerate-p0";
  }
  return "unknown";
}

const char* to_string(Selection selection) {
  return selection == Selection::kDmvPreferred ? "dmv-preferred" : "pessimistic";
}

namespace {

// Collapses floating-point residue at the corners (the linear solve leaves
// ~1e-17 at exact boundary policies) so regimes classify cleanly.
double snap_to_corners(double theta_hat) {
  if (theta_hat <= kTol) return 0.0;
  if (theta_hat >= 0.5 - kTol) return 0.5;
  return theta_hat;
}

DisclosureEquilibrium make_eq(double p, double c, double theta_hat, Regime regime,
                              std::string note = {}) {
  DisclosureEquilibrium eq;
  eq.p = p;
  eq.c = c;
  eq.theta_hat = theta_hat;
  eq.q = std::min(2.0 * theta_hat, 1.0);
  eq.e_disclosed = (1.0 + eq.q) / 2.0;
  eq.regime = regime;
  eq.selection_note = std::move(note);
  return eq;
}

Regime regime_from_theta_hat(double theta_hat) {
  if (theta_hat <= 0.0) return Regime::kAllDiscloseCorner;
  if (theta_hat >= 0.5) return Regime::kNoDisclosure;
  return Regime::kInterior;
}

}  // namespace

DisclosureEquilibrium costly_equilibrium(double c) {
  if (!(c >= 0.0)) {
    throw std::invalid_argument("c negative");
  }
  const double theta_hat = snap_to_corners(std::min(c, 0.5));
  return make_eq(1.0, c, theta_hat, regime_from_theta_hat(theta_hat));
}

DisclosureEquilibrium noisy_equilibrium(SignalPolicy policy, Selection selection) {
  validate_policy(policy);
  const double p = policy.p;
  const double c = policy.c;

  if (p == 1.0) {
    return costly_equilibrium(c);
  }
  if (p == 0.0) {
    auto eq = make_eq(0.0, c, 0.5, Regime::kDegenerateP0,
                      "uninformative signal (p=0): certificates convey nothing "
                      "and no seller buys one");
    return eq;
  }

  if (p > 0.5) {
    // Contraction: unique equilibrium, the clamped linear solution.
    const double raw = (1.0 - p * p - 2.0 * c) / (2.0 * p * (1.0 - 2.0 * p));
    const double theta_hat = snap_to_corners(std::clamp(raw, 0.0, 0.5));
    return make_eq(p, c, theta_hat, regime_from_theta_hat(theta_hat));
  }

  // p in (0, 1/2]: the interior fixed point is unstable (map slope 1/(2p) > 1);
  // the corners are the candidates. All-disclose is self-consistent iff
  // c <= (1-p^2)/2 and no-disclosure iff c >= (1-p+p^2)/2; for p < 1/2 the
  // two bands overlap, at p = 1/2 they meet at c = 3/8 where every
  // theta_hat in [0, 1/2] is a fixed point.
  const double c_all = (1.0 - p * p) / 2.0;          // lemons' reservation fee
  const double c_none = (1.0 - p + p * p) / 2.0;     // top type's walk-away fee
  const bool all_ok = c <= c_all;
  const bool none_ok = c >= c_none;

  const bool dmv = selection == Selection::kDmvPreferred;
  const double theta_hat = (dmv ? all_ok : !none_ok) ? 0.0 : 0.5;
  const Regime regime = theta_hat == 0.0 ? Regime::kAllDiscloseCorner
                                         : Regime::kNoDisclosure;

  std::string note;
  if (all_ok && none_ok) {
    if (p == 0.5) {
      note = "equilibrium continuum at p=1/2, c=3/8: every theta_hat in "
             "[0,1/2] is a fixed point; " +
             std::string(to_string(selection)) + " selection reports " +
             to_string(regime);
    } else {
      const double interior =
          (1.0 - p * p - 2.0 * c) / (2.0 * p * (1.0 - 2.0 * p));
      note = "multiple equilibria: all-disclose and no-disclosure are both "
             "self-consistent (unstable interior fixed point at theta_hat=" +
             fmt12(interior) + "); " + to_string(selection) +
             " selection reports " + to_string(regime);
    }
  }
  return make_eq(p, c, theta_hat, regime, std::move(note));
}

double willingness_to_pay(double displayed, const DisclosureEquilibrium& eq) {
  if (!(displayed >= 0.0 && displayed <= 1.0)) {
    throw std::invalid_argument("displayed quality out of [0,1]");
  }
  if (eq.q >= 1.0) {
    throw std::domain_error("no disclosed pool");
  }
  return eq.p * displayed + (1.0 - eq.p) * eq.e_disclosed;
}

double disclosure_value(double theta0, double p, double theta_hat) {
  return (1.0 - p) * (1.0 + p + 2.0 * theta_hat) / 2.0 + p * p * theta0;
}

double expected_disclosure_payoff(double theta0, const DisclosureEquilibrium& eq) {
  if (!(theta0 >= 0.0 && theta0 <= 1.0)) {
    throw std::invalid_argument("theta0 out of [0,1]");
  }
  if (eq.q >= 1.0) {
    throw std::domain_error("no disclosed pool");
  }
  return disclosure_value(theta0, eq.p, eq.theta_hat);
}

bool discloses_given_belief(double theta0, const SignalPolicy& policy,
                            double theta_hat) {
  return disclosure_value(theta0, policy.p, theta_hat) - policy.c > theta_hat;
}

Decision disclosure_decision(double theta0, const SignalPolicy& policy,
                             const DisclosureEquilibrium& eq) {
  if (!(theta0 >= 0.0 && theta0 <= 1.0)) {
    throw std::invalid_argument("theta0 out of [0,1]");
  }
  return discloses_given_belief(theta0, policy, eq.theta_hat)
             ? Decision::kDisclose
             : Decision::kNotDisclose;
}

}  // namespace lemons
