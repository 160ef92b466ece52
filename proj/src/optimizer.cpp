#include "lemons/optimizer.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lemons {

const char* to_string(CurveRegime regime) {
  switch (regime) {
    case CurveRegime::kInterior: return "interior";
    case CurveRegime::kCorner: return "corner";
    case CurveRegime::kDegenerate: return "degenerate";
  }
  return "unknown";
}

double p_min_constant() { return (1.0 + std::sqrt(13.0)) / 6.0; }

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p out of [0,1]");
  }
}

double profit_at(double p, double c) {
  const auto eq = noisy_equilibrium({p, c});
  return c * (1.0 - eq.q);
}

// Golden-section maximization on [lo, hi]; the objective here is unimodal on
// each bracket we pass (linear ramp into a concave parabola). Returns the
// best point seen, including the bracket endpoints, so boundary maxima are
// exact up to the final bracket width.
double golden_section_max(double lo, double hi, double resolution,
                          double (*objective)(double, double), double p) {
  assert(lo <= hi);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;

  double best_x = lo;
  double best_f = objective(p, lo);
  auto consider = [&](double x, double f) {
    if (f > best_f) {
      best_f = f;
      best_x = x;
    }
  };
  consider(hi, objective(p, hi));

  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = objective(p, x1);
  double f2 = objective(p, x2);
  consider(x1, f1);
  consider(x2, f2);
  while (b - a > resolution) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = objective(p, x2);
      consider(x2, f2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = objective(p, x1);
      consider(x1, f1);
    }
  }
  return best_x;
}

}  // namespace

double fee_star(double p) {
  check_probability(p);
  if (p == 0.0) return 0.0;
  if (p >= p_min_constant()) return (1.0 - p + p * p) / 4.0;
  return (1.0 - p * p) / 2.0;
}

double profit_star(double p) {
  check_probability(p);
  if (p == 0.0) return 0.0;
  if (p >= p_min_constant()) {
    const double num = 1.0 - p + p * p;
    return num * num / (8.0 * p * (2.0 * p - 1.0));
  }
  return (1.0 - p * p) / 2.0;
}

double fee_star_numeric(double p, double resolution) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must be in (0,1]");
  }
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("resolution must be positive");
  }

  // Feasible fee bracket where q(p,c) spans [0,1]. For p > 1/2 that is
  // [(1-p^2)/2, (1-p+p^2)/2]; for p <= 1/2 the bounds swap roles and the
  // dmv-preferred profit is the linear ramp c on the whole bracket. At
  // p = 1/2 both collapse to the single point 3/8.
  const double c_all = (1.0 - p * p) / 2.0;
  const double c_none = (1.0 - p + p * p) / 2.0;
  const double lo = std::min(c_all, c_none);
  const double hi = std::max(c_all, c_none);
  assert(lo <= hi);
  if (hi - lo <= resolution) {
    return (lo + hi) / 2.0;
  }
  return golden_section_max(lo, hi, resolution, profit_at, p);
}

PolicyCurvePoint curve_point(double p) {
  check_probability(p);
  PolicyCurvePoint point;
  point.p = p;
  if (p == 0.0) {
    point.c_star = 0.0;
    point.profit_star = 0.0;
    point.q_at_optimum = 1.0;
    point.regime = CurveRegime::kDegenerate;
    return point;
  }
  point.c_star = fee_star(p);
  point.profit_star = profit_star(p);
  const auto eq = noisy_equilibrium({p, point.c_star});
  point.q_at_optimum = eq.q;
  point.regime = eq.regime == Regime::kInterior ? CurveRegime::kInterior
                                                : CurveRegime::kCorner;
  return point;
}

std::vector<PolicyCurvePoint> profit_curve(const std::vector<double>& p_grid) {
  std::vector<PolicyCurvePoint> points;
  points.reserve(p_grid.size());
  double prev = -1.0;
  for (double p : p_grid) {
    check_probability(p);
    if (p <= prev) {
      throw std::invalid_argument("p grid must be strictly ascending");
    }
    prev = p;
    points.push_back(curve_point(p));
  }
  return points;
}

}  // namespace lemons
