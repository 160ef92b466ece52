#include "lemons/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lemons/rng.hpp"

namespace lemons {

namespace {

// Stream ids for the counter RNG; one stream per random source.
constexpr std::uint64_t kStreamTypes = 0;
constexpr std::uint64_t kStreamSignalTruth = 1;
constexpr std::uint64_t kStreamSignalFake = 2;

std::vector<double> sample_types(const CounterRng& rng, int n) {
  std::vector<double> types(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    types[static_cast<std::size_t>(i)] =
        rng.uniform(kStreamTypes, static_cast<std::uint64_t>(i));
  }
  return types;
}

Regime attractor_label(std::size_t nondisclosers, std::size_t n) {
  if (nondisclosers == 0) return Regime::kAllDiscloseCorner;
  if (nondisclosers == n) return Regime::kNoDisclosure;
  return Regime::kInterior;
}

double sample_sd(double sum, double sumsq, double n) {
  if (n < 2.0) return 0.0;
  const double mean = sum / n;
  const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
  return std::sqrt(var);
}

constexpr double kZ95 = 1.959963984540054;  // two-sided 95% normal quantile

}  // namespace

void validate_config(const SimulationConfig& config) {
  if (config.n_sellers < 100) {
    throw std::invalid_argument("n_sellers must be >= 100");
  }
  if (!(config.tol > 0.0)) {
    throw std::invalid_argument("tol must be positive");
  }
  if (config.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (!(config.initial_theta_hat >= 0.0 && config.initial_theta_hat <= 0.5)) {
    throw std::invalid_argument("initial_theta_hat must be in [0, 0.5]");
  }
  if (config.signal_draws_per_seller < 1) {
    throw std::invalid_argument("signal_draws_per_seller must be >= 1");
  }
}

DynamicsResult best_response_dynamics(const SignalPolicy& policy,
                                      const SimulationConfig& config) {
  validate_policy(policy);
  validate_config(config);
  if (!(policy.p > 0.0)) {
    throw std::invalid_argument("best-response dynamics require p > 0");
  }

  const CounterRng rng(config.seed);
  const auto types = sample_types(rng, config.n_sellers);

  DynamicsResult result;
  double theta_hat = config.initial_theta_hat;
  double prev = theta_hat;
  for (int iter = 1; iter <= config.max_iterations; ++iter) {
    double sum = 0.0;
    std::size_t count = 0;
    for (double theta : types) {
      if (!discloses_given_belief(theta, policy, theta_hat)) {
        sum += theta;
        ++count;
      }
    }
    const double next = count == 0 ? 0.0 : sum / static_cast<double>(count);
    prev = theta_hat;
    result.iterations = iter;
    if (std::abs(next - theta_hat) < config.tol) {
      theta_hat = next;
      result.converged = true;
      break;
    }
    theta_hat = next;
  }

  result.theta_hat = theta_hat;
  result.prev_theta_hat = prev;
  std::size_t nondisclosers = 0;
  for (double theta : types) {
    if (!discloses_given_belief(theta, policy, theta_hat)) ++nondisclosers;
  }
  result.attractor = attractor_label(nondisclosers, types.size());
  return result;
}

SimulationReport simulate_market(const SignalPolicy& policy,
                                 const SimulationConfig& config) {
  const auto dynamics = best_response_dynamics(policy, config);

  const CounterRng rng(config.seed);
  const auto types = sample_types(rng, config.n_sellers);
  const double p = policy.p;
  const double c = policy.c;
  const double n = static_cast<double>(types.size());

  SimulationReport report;
  report.p = p;
  report.c = c;
  report.iterations = dynamics.iterations;
  report.converged = dynamics.converged;
  report.attractor = dynamics.attractor;
  report.n_sellers = config.n_sellers;
  report.seed = config.seed;
  report.initial_theta_hat = config.initial_theta_hat;
  report.signal_draws_per_seller = config.signal_draws_per_seller;

  // Partition the population at the final belief.
  std::vector<std::uint32_t> disclosers;
  disclosers.reserve(types.size());
  double non_sum = 0.0, non_sumsq = 0.0, disc_sum = 0.0;
  for (std::uint32_t i = 0; i < types.size(); ++i) {
    const double theta = types[i];
    if (discloses_given_belief(theta, policy, dynamics.theta_hat)) {
      disclosers.push_back(i);
      disc_sum += theta;
    } else {
      non_sum += theta;
      non_sumsq += theta * theta;
    }
  }
  const double n_non = n - static_cast<double>(disclosers.size());
  const double n_disc = static_cast<double>(disclosers.size());

  report.theta_hat_emp = n_non == 0.0 ? 0.0 : non_sum / n_non;
  report.q_emp = n_non / n;
  report.e_disclosed_emp = n_disc == 0.0 ? 0.0 : disc_sum / n_disc;
  // All mass-derived fields use 1 - q_emp so the reported identities are
  // bitwise, not just within rounding.
  const double disclosure_fraction = 1.0 - report.q_emp;
  report.dmv_profit_emp = c * disclosure_fraction;

  const auto analytic = noisy_equilibrium(policy);
  report.dmv_profit_analytic = c * (1.0 - analytic.q);
  report.abs_error = std::abs(report.dmv_profit_emp - report.dmv_profit_analytic);

  // Signal draws and buyer payments for the disclosing pool. Payments use
  // the realized pool mean, which buyers are assumed to know.
  const int draws_per = config.signal_draws_per_seller;
  const double e_pool = report.e_disclosed_emp;
  report.payment_bins.assign(10, PaymentBin{});
  std::vector<double> bin_sum(10, 0.0), bin_sumsq(10, 0.0), bin_theta_sum(10, 0.0);
  std::vector<std::int64_t> bin_sellers(10, 0);
  double pay_sum = 0.0, pay_sumsq = 0.0, misinfo_sum = 0.0;

  for (std::uint32_t idx : disclosers) {
    const double theta = types[idx];
    const int bin = std::min(9, static_cast<int>(theta * 10.0));
    bin_theta_sum[static_cast<std::size_t>(bin)] += theta;
    ++bin_sellers[static_cast<std::size_t>(bin)];
    for (int j = 0; j < draws_per; ++j) {
      const std::uint64_t draw_index =
          static_cast<std::uint64_t>(idx) * static_cast<std::uint64_t>(draws_per) +
          static_cast<std::uint64_t>(j);
      const bool truthful = rng.bernoulli(p, kStreamSignalTruth, draw_index);
      const double shown = truthful ? theta : rng.uniform(kStreamSignalFake, draw_index);
      const double payment = p * shown + (1.0 - p) * e_pool;
      pay_sum += payment;
      pay_sumsq += payment * payment;
      misinfo_sum += std::abs(payment - theta);
      bin_sum[static_cast<std::size_t>(bin)] += payment;
      bin_sumsq[static_cast<std::size_t>(bin)] += payment * payment;
    }
  }

  const double total_draws = n_disc * static_cast<double>(draws_per);
  report.mean_payment_emp = total_draws == 0.0 ? 0.0 : pay_sum / total_draws;

  for (int b = 0; b < 10; ++b) {
    auto& bin = report.payment_bins[static_cast<std::size_t>(b)];
    bin.theta_lo = b / 10.0;
    bin.theta_hi = (b + 1) / 10.0;
    bin.draws = bin_sellers[static_cast<std::size_t>(b)] * draws_per;
    if (bin.draws > 0) {
      const double nd = static_cast<double>(bin.draws);
      bin.mean_payment = bin_sum[static_cast<std::size_t>(b)] / nd;
      const double mean_theta = bin_theta_sum[static_cast<std::size_t>(b)] /
                                static_cast<double>(bin_sellers[static_cast<std::size_t>(b)]);
      bin.predicted = p * p * mean_theta + (1.0 - p) * e_pool + (1.0 - p) * p / 2.0;
      bin.ci_half_width = kZ95 *
          sample_sd(bin_sum[static_cast<std::size_t>(b)],
                    bin_sumsq[static_cast<std::size_t>(b)], nd) /
          std::sqrt(nd);
    }
  }

  // 95% half-widths.
  report.ci_half_width.q = kZ95 * std::sqrt(report.q_emp * (1.0 - report.q_emp) / n);
  report.ci_half_width.theta_hat =
      n_non == 0.0 ? 0.0
                   : kZ95 * sample_sd(non_sum, non_sumsq, n_non) / std::sqrt(n_non);
  report.ci_half_width.dmv_profit = c * report.ci_half_width.q;
  report.ci_half_width.mean_payment =
      total_draws == 0.0
          ? 0.0
          : kZ95 * sample_sd(pay_sum, pay_sumsq, total_draws) / std::sqrt(total_draws);

  // Empirical welfare decomposition. Nondisclosers sell at the belief
  // theta_hat_emp; disclosure spend is the fee times the realized mass.
  report.welfare.dmv_profit = report.dmv_profit_emp;
  report.welfare.certification_spend = report.dmv_profit_emp;
  report.welfare.seller_surplus_gross =
      (n_non * report.theta_hat_emp +
       (total_draws == 0.0 ? 0.0 : pay_sum / static_cast<double>(draws_per))) / n;
  report.welfare.buyer_misinformation =
      total_draws == 0.0 ? 0.0 : misinfo_sum / total_draws;
  report.welfare.fake_signal_rate = (1.0 - p) * disclosure_fraction;
  report.welfare.trade_volume = 1.0;

  return report;
}

WelfareReport welfare_report(const SimulationReport& report) {
  return report.welfare;
}

UnravelingTrace simulate_unraveling(const MarketParams& params, int rounds,
                                    int n_sellers, std::uint64_t seed) {
  if (!(params.pi > 0.5)) {
    throw std::invalid_argument("simulate_unraveling requires pi > 0.5");
  }
  if (rounds < 1) {
    throw std::invalid_argument("rounds must be >= 1");
  }
  if (n_sellers < 100) {
    throw std::invalid_argument("n_sellers must be >= 100");
  }

  const CounterRng rng(seed);
  auto remaining = sample_types(rng, n_sellers);

  UnravelingTrace trace;
  auto record = [&trace, &remaining]() {
    double max_theta = 0.0, sum = 0.0;
    for (double theta : remaining) {
      max_theta = std::max(max_theta, theta);
      sum += theta;
    }
    const double mean =
        remaining.empty() ? 0.0 : sum / static_cast<double>(remaining.size());
    trace.cutoffs.push_back(max_theta);
    trace.buyer_offers.push_back(mean);
  };

  record();
  bool stationary = false;
  for (int r = 1; r <= rounds; ++r) {
    const double offer = trace.buyer_offers.back();
    const std::size_t before = remaining.size();
    std::erase_if(remaining,
                  [&](double theta) { return params.pi * theta > offer; });
    stationary = remaining.size() == before;
    record();
    trace.rounds = r;
  }
  trace.converged = stationary;
  trace.limit = trace.cutoffs.back();
  return trace;
}

}  // namespace lemons
