// Acceptance suite: runs every headline result end to end and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lemons/equilibrium.hpp"
#include "lemons/optimizer.hpp"
#include "lemons/serialize.hpp"
#include "lemons/simulator.hpp"
#include "lemons/unraveling.hpp"
#include "lemons/welfare.hpp"

using namespace lemons;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::string&)> body;  // throws or appends failure text
};

void require(bool ok, const std::string& detail, std::string& failures) {
  if (!ok) failures += (failures.empty() ? "" : "; ") + detail;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// 1. Baseline optimum: c* = 1/4, P = 1/8, disclosure threshold 1/2.
void baseline_optimum(std::string& failures) {
  const auto eq = costly_equilibrium(0.25);
  require(std::abs(eq.theta_hat - 0.25) <= 1e-12, "theta_hat != 0.25", failures);
  require(std::abs(eq.q - 0.5) <= 1e-12, "disclosure threshold != 0.5", failures);
  require(std::abs(fee_star(1.0) - 0.25) <= 1e-12, "c*(1) != 0.25", failures);
  require(std::abs(profit_star(1.0) - 0.125) <= 1e-12, "P*(1) != 0.125", failures);
  const SignalPolicy policy{1.0, 0.25};
  require(disclosure_decision(0.5, policy, eq) == Decision::kNotDisclose,
          "cutoff type should not disclose", failures);
  require(disclosure_decision(0.5 + 1e-9, policy, eq) == Decision::kDisclose,
          "types above 0.5 should disclose", failures);
}

// 2. Boundary constant p_min and the profit there.
void boundary_constant(std::string& failures) {
  const double p_min = p_min_constant();
  require(std::abs(p_min - 0.7675918792439982) <= 1e-9,
          "p_min != 0.7675918792...", failures);
  require(std::abs(profit_star(p_min) - 0.2054013534593336) <= 1e-9,
          "P*(p_min) != 0.2054013535...", failures);
  require(std::abs(profit_star(p_min) - (11.0 - std::sqrt(13.0)) / 36.0) <= 1e-12,
          "P*(p_min) != (11-sqrt(13))/36", failures);
}

// 3. Curve reproduction over the percent grid.
void curve_reproduction(std::string& failures) {
  std::vector<double> grid;
  for (int i = 1; i <= 100; ++i) grid.push_back(i / 100.0);
  const auto points = profit_curve(grid);
  require(points.size() == 100, "grid size", failures);
  for (std::size_t i = 1; i < points.size(); ++i) {
    require(points[i].profit_star < points[i - 1].profit_star,
            "profit not strictly decreasing at p=" + fmt(points[i].p), failures);
  }
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    require(points[i].profit_star > 0.125 && points[i].profit_star < 0.5,
            "profit out of (1/8,1/2) at p=" + fmt(points[i].p), failures);
  }
  require(std::abs(points.back().profit_star - 0.125) <= 1e-12,
          "P*(1) != 1/8", failures);

  const double p_min = p_min_constant();
  const double interior_c = (1.0 - p_min + p_min * p_min) / 4.0;
  const double corner_c = (1.0 - p_min * p_min) / 2.0;
  const double num = 1.0 - p_min + p_min * p_min;
  const double interior_profit = num * num / (8.0 * p_min * (2.0 * p_min - 1.0));
  require(std::abs(interior_c - corner_c) <= 1e-12,
          "fee branches disagree at p_min", failures);
  require(std::abs(interior_profit - corner_c) <= 1e-12,
          "profit branches disagree at p_min", failures);
  require(profit_star(0.05) / profit_star(1.0) > 3.9,
          "profit ratio at p=0.05 not > 3.9", failures);
}

// 4. Reduction: noisy(p=1, c) == costly(c) field by field.
void reduction_property(std::string& failures) {
  for (int i = 0; i <= 60; ++i) {
    const double c = i / 100.0;
    const auto noisy = noisy_equilibrium({1.0, c});
    const auto costly = costly_equilibrium(c);
    const bool match = std::abs(noisy.theta_hat - costly.theta_hat) <= 1e-12 &&
                       std::abs(noisy.q - costly.q) <= 1e-12 &&
                       std::abs(noisy.e_disclosed - costly.e_disclosed) <= 1e-12 &&
                       noisy.regime == costly.regime && noisy.p == costly.p &&
                       noisy.c == costly.c;
    require(match, "mismatch at c=" + fmt(c), failures);
  }
}

// 5. Oracle equivalence: Monte Carlo vs analytic at the optimal fees.
void oracle_equivalence(std::string& failures) {
  SimulationConfig config;
  config.n_sellers = 100000;
  config.seed = 20260811;
  for (double p : {0.6, 0.8, 0.9, 1.0}) {
    const SignalPolicy policy{p, fee_star(p)};
    const auto eq = noisy_equilibrium(policy);
    const auto report = simulate_market(policy, config);
    require(report.converged, "dynamics did not converge at p=" + fmt(p), failures);
    require(std::abs(report.q_emp - eq.q) <= 0.01,
            "q_emp off by " + fmt(std::abs(report.q_emp - eq.q)) + " at p=" + fmt(p),
            failures);
    require(std::abs(report.dmv_profit_emp - profit_star(p)) <= 0.005,
            "profit_emp off at p=" + fmt(p), failures);
  }
}

// 6. Unraveling: closed form for 60 rounds, plus the empirical trace.
void unraveling(std::string& failures) {
  for (int tenths = 55; tenths <= 95; tenths += 5) {
    const double pi = tenths / 100.0;
    const auto trace = unravel_trace(MarketParams::checked(pi), 1e-300, 60);
    for (int n = 0; n <= 60; ++n) {
      const double closed_form = std::pow(2.0 * pi, -n);
      if (std::abs(trace.cutoffs[static_cast<std::size_t>(n)] - closed_form) > 1e-12) {
        require(false, "cutoff drift at pi=" + fmt(pi) + " n=" + fmt(n), failures);
        break;
      }
    }
  }
  const auto empirical =
      simulate_unraveling(MarketParams::checked(0.75), 10, 100000, 20260811);
  require(std::abs(empirical.cutoffs[10] - 0.017341529915832613) <= 0.01,
          "empirical round-10 cutoff " + fmt(empirical.cutoffs[10]), failures);
}

// 7. Numeric optimizer agrees with the closed form across the p sweep.
void numeric_agreement(std::string& failures) {
  for (int i = 1; i <= 20; ++i) {
    const double p = i / 20.0;
    if (p == 0.5) continue;
    const double numeric = fee_star_numeric(p, 1e-7);
    require(std::abs(numeric - fee_star(p)) <= 1e-6,
            "numeric/analytic gap " + fmt(std::abs(numeric - fee_star(p))) +
                " at p=" + fmt(p),
            failures);
  }
}

// 8. W is linear in theta0 with slope p^2.
void payoff_slope(std::string& failures) {
  for (double p : {0.2, 0.5, 0.8, 1.0}) {
    DisclosureEquilibrium eq = noisy_equilibrium({p, p >= 0.8 ? fee_star(p) : 0.3});
    if (eq.q >= 1.0) {
      require(false, "no disclosed pool at p=" + fmt(p), failures);
      continue;
    }
    const double h = 1e-4;
    for (double theta0 : {0.2, 0.5, 0.8}) {
      const double slope = (expected_disclosure_payoff(theta0 + h, eq) -
                            expected_disclosure_payoff(theta0 - h, eq)) /
                           (2.0 * h);
      require(std::abs(slope - p * p) <= 1e-8,
              "slope off at p=" + fmt(p) + " theta0=" + fmt(theta0), failures);
    }
  }
}

// 9. Multiplicity at (p=0.4, c=0.42) and the dmv-preferred corner.
void multiplicity(std::string& failures) {
  SimulationConfig config;
  config.n_sellers = 100000;
  config.seed = 20260811;
  const SignalPolicy policy{0.4, 0.42};

  config.initial_theta_hat = 0.0;
  const auto from_zero = best_response_dynamics(policy, config);
  require(from_zero.attractor == Regime::kAllDiscloseCorner,
          "start 0 should reach all-disclose", failures);

  config.initial_theta_hat = 0.5;
  const auto from_half = best_response_dynamics(policy, config);
  require(from_half.attractor == Regime::kNoDisclosure,
          "start 1/2 should reach no-disclosure", failures);

  const auto selected = noisy_equilibrium(policy);
  require(selected.regime == Regime::kAllDiscloseCorner && selected.q == 0.0,
          "dmv-preferred selection should be the all-disclose corner", failures);
}

// 10. Determinism: identical seeds give byte-identical reports.
void determinism(std::string& failures) {
  SimulationConfig config;
  config.n_sellers = 100000;
  config.seed = 424242;
  const SignalPolicy policy{0.9, 0.2275};
  const auto first = to_json(simulate_market(policy, config));
  const auto second = to_json(simulate_market(policy, config));
  require(first == second, "reports differ across identical runs", failures);
  config.seed = 424243;
  require(first != to_json(simulate_market(policy, config)),
          "reports identical across different seeds", failures);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"baseline optimum c*=1/4, P=1/8, threshold 1/2", baseline_optimum},
      {"boundary constant p_min and P*(p_min)", boundary_constant},
      {"profit curve shape on the percent grid", curve_reproduction},
      {"noisy model reduces to the costly model at p=1", reduction_property},
      {"monte carlo oracle matches analytic equilibria", oracle_equivalence},
      {"unraveling closed form and empirical trace", unraveling},
      {"numeric fee search agrees with closed form", numeric_agreement},
      {"disclosure payoff slope equals p^2", payoff_slope},
      {"equilibrium multiplicity below p=1/2", multiplicity},
      {"seeded simulation reports are byte-identical", determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string failures;
    try {
      criteria[i].body(failures);
    } catch (const std::exception& e) {
      failures += (failures.empty() ? "" : "; ") + std::string("exception: ") + e.what();
    }
    if (failures.empty()) {
      std::printf("PASS  %2zu. %s\n", i + 1, criteria[i].name.c_str());
    } else {
      std::printf("FAIL  %2zu. %s  [%s]\n", i + 1, criteria[i].name.c_str(),
                  failures.c_str());
      ++failed;
    }
  }
  if (failed != 0) {
    std::printf("%d of %zu acceptance criteria failed\n", failed, criteria.size());
  }
  return failed == 0 ? 0 : 1;
}
