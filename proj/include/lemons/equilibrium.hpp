#pragma once

#include <string>

#include "lemons/market.hpp"

namespace lemons {

enum class Regime {
  kAllDiscloseCorner,  // q = 0: every type except the lemons certifies
  kInterior,           // q in (0,1): cutoff type strictly inside
  kNoDisclosure,       // q = 1: nobody certifies
  kDegenerateP0,       // p = 0: uninformative certificates, never bought
};

const char* to_string(Regime regime);

/// Which equilibrium to report when several are self-consistent (p <= 1/2).
enum class Selection {
  kDmvPreferred,  // the authority's favorite: maximal disclosure mass
  kPessimistic,   // no-disclosure whenever it is self-consistent
};

const char* to_string(Selection selection);

/// Disclosure equilibrium of the certification game. Under the uniform prior
/// the nondisclosers are exactly [0, q], so theta_hat = q/2 and the disclosed
/// pool mean is (1+q)/2; total expectation q*theta_hat + (1-q)*e_disclosed =
/// 1/2 holds identically. e_disclosed is reported as the limit value 1 when
/// q = 1 (empty pool).
struct DisclosureEquilibrium {
  double p = 1.0;
  double c = 0.0;
  double theta_hat = 0.0;   // buyers' mean belief about a nondiscloser, in [0, 1/2]
  double q = 0.0;           // nondisclosure mass (== cutoff type)
  double e_disclosed = 0.5; // mean quality in the disclosed pool
  Regime regime = Regime::kInterior;
  std::string selection_note;  // nonempty when multiple equilibria exist
};

/// Perfect-signal benchmark (p = 1): theta_hat = min(c, 1/2); for c <= 1/2
/// the certifying set is theta >= 2c, for c > 1/2 nobody certifies.
DisclosureEquilibrium costly_equilibrium(double c);

/// Noisy-certificate equilibrium for any policy (p, c).
///
/// The cutoff map is theta_hat -> (2 p theta_hat + p^2 - 1 + 2c) / (4 p^2),
/// with slope 1/(2p). For p > 1/2 it is a contraction and the unique
/// equilibrium is the clamped linear solution
///     theta_hat = clamp((1 - p^2 - 2c) / (2p(1-2p)), [0, 1/2]).
/// For p < 1/2 the interior fixed point (which exists only for c in
/// [(1-p+p^2)/2, (1-p^2)/2]) is unstable and the two corners are the
/// candidate equilibria; `selection` picks one and selection_note records
/// the multiplicity. p = 1/2 admits a continuum at c = 3/8 and is resolved
/// by the same corner logic. The closed form's denominator is never
/// evaluated at p in {0, 1/2}.
DisclosureEquilibrium noisy_equilibrium(SignalPolicy policy,
                                        Selection selection = Selection::kDmvPreferred);

/// Buyer's willingness to pay on seeing displayed quality s:
/// p*s + (1-p)*e_disclosed. Requires a nonempty disclosed pool (q < 1).
double willingness_to_pay(double displayed, const DisclosureEquilibrium& eq);

/// Expected sale price for a type-theta0 seller who certifies, before the
/// signal realizes: W(theta0) = (1-p)(1+p+2*theta_hat)/2 + p^2*theta0.
/// Linear in theta0 with slope exactly p^2. Requires q < 1.
double expected_disclosure_payoff(double theta0, const DisclosureEquilibrium& eq);

/// Same expression without the disclosed-pool guard. Used for best-response
/// evaluation at out-of-equilibrium beliefs, where e_disclosed is pinned to
/// (1 + 2*theta_hat)/2 by the cutoff structure.
double disclosure_value(double theta0, double p, double theta_hat);

/// Certify iff W(theta0) - c > theta_hat, strictly; indifferent types do not
/// certify. Defined for any belief, not just equilibrium ones.
bool discloses_given_belief(double theta0, const SignalPolicy& policy,
                            double theta_hat);

enum class Decision { kDisclose, kNotDisclose };

Decision disclosure_decision(double theta0, const SignalPolicy& policy,
                             const DisclosureEquilibrium& eq);

}  // namespace lemons
