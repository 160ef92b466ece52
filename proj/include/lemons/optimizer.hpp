#pragma once

#include <vector>

#include "lemons/equilibrium.hpp"

namespace lemons {

enum class CurveRegime { kInterior, kCorner, kDegenerate };

const char* to_string(CurveRegime regime);

/// One sample of the optimal-policy curves: at truth probability p the
/// authority's best fee c*, the profit it earns, and the equilibrium it
/// induces. profit_star == c_star * (1 - q_at_optimum).
struct PolicyCurvePoint {
  double p = 1.0;
  double c_star = 0.0;
  double profit_star = 0.0;
  double q_at_optimum = 0.0;
  CurveRegime regime = CurveRegime::kInterior;
};

/// Truth probability below which the fee optimum switches from the interior
/// first-order condition to the all-disclose corner: the positive root of
/// 3p^2 - p - 1 = 0, (1 + sqrt(13))/6 ~= 0.7676.
double p_min_constant();

/// Optimal fee:  (1-p+p^2)/4 for p >= p_min (interior FOC),
///               (1-p^2)/2 for 0 < p < p_min (lemons' reservation fee),
///               0 at p = 0. The two branches agree at p_min.
double fee_star(double p);

/// Optimal profit:  (1-p+p^2)^2 / (8p(2p-1)) for p >= p_min,
///                  (1-p^2)/2 for 0 < p < p_min, 0 at p = 0.
/// Strictly decreasing on (0,1], supremum 1/2 as p -> 0, value 1/8 at p = 1.
double profit_star(double p);

/// Independent verification route: maximizes c * (1 - q(p,c)) by
/// golden-section search over the feasible fee bracket, with q taken from
/// noisy_equilibrium rather than any closed form. Agrees with fee_star
/// within max(resolution, 1e-6). Requires p in (0,1].
double fee_star_numeric(double p, double resolution = 1e-7);

PolicyCurvePoint curve_point(double p);

/// One point per grid value; grid must be ascending within [0,1].
/// p = 0 maps to the degenerate zero-profit point.
std::vector<PolicyCurvePoint> profit_curve(const std::vector<double>& p_grid);

}  // namespace lemons
