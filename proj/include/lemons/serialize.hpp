#pragma once

#include <string>
#include <vector>

#include "lemons/equilibrium.hpp"
#include "lemons/optimizer.hpp"
#include "lemons/simulator.hpp"
#include "lemons/unraveling.hpp"

namespace lemons {

/// Output schemas are contracts: header strings, key order, 12-significant-
/// digit numbers, LF line endings. Re-running a command must reproduce the
/// bytes exactly.

/// "round,cutoff,buyer_offer" rows plus a "# converged=... rounds=... limit=..."
/// footer comment.
std::string to_csv(const UnravelingTrace& trace);
std::string to_json(const UnravelingTrace& trace);

/// Keys: p,c,theta_hat,q,e_disclosed,regime,selection_note.
std::string to_json(const DisclosureEquilibrium& eq);
std::string to_csv(const DisclosureEquilibrium& eq);

/// Header exactly "p,c_star,profit_star,q_at_optimum,regime".
std::string to_csv(const std::vector<PolicyCurvePoint>& points);

std::string to_json(const SimulationReport& report);

}  // namespace lemons
