// Command-line front end: every analysis as a deterministic subcommand with
// CSV/JSON output. Exit codes: 0 success, 2 invalid arguments, 3
// non-convergence (report still emitted).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lemons/equilibrium.hpp"
#include "lemons/market.hpp"
#include "lemons/optimizer.hpp"
#include "lemons/serialize.hpp"
#include "lemons/simulator.hpp"
#include "lemons/textio.hpp"
#include "lemons/unraveling.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitNoConvergence = 3;

using ParamEcho = std::vector<std::pair<std::string, std::string>>;

// Run record: enough to reproduce the output byte for byte, plus a checksum
// of the bytes actually produced.
std::string manifest_json(const std::string& command, const ParamEcho& params,
                          const std::string& seed_value,
                          const std::string& payload) {
  std::string out = "{\n";
  out += "  \"command\": \"" + lemons::json_escape(command) + "\",\n";
  out += "  \"tool_version\": \"" + std::string(kToolVersion) + "\",\n";
  out += "  \"seed\": " + (seed_value.empty() ? "null" : seed_value) + ",\n";
  out += "  \"parameters\": {";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i != 0) out += ",";
    out += "\n    \"" + params[i].first + "\": " + params[i].second;
  }
  out += params.empty() ? "},\n" : "\n  },\n";
  out += "  \"output_checksum\": \"" + lemons::checksum_hex(payload) + "\"\n";
  out += "}\n";
  return out;
}

std::string quoted(const std::string& s) {
  return "\"" + lemons::json_escape(s) + "\"";
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  stream << bytes;
}

std::string indent_block(const std::string& block, const std::string& pad) {
  std::string out;
  std::size_t start = 0;
  while (start < block.size()) {
    std::size_t end = block.find('\n', start);
    if (end == std::string::npos) end = block.size();
    out += pad + block.substr(start, end - start) + "\n";
    start = end + 1;
  }
  // drop the trailing newline so callers control separators
  if (!out.empty()) out.pop_back();
  return out;
}

struct CommandOutput {
  std::string payload;
  std::string command;
  ParamEcho params;
  std::string seed_value;  // empty -> null in the manifest
  int exit_code = kExitOk;
};

// ---- subcommand handlers ----

struct UnravelArgs {
  double pi = 0.75;
  double tol = 1e-9;
  int max_rounds = 200;
  std::string format = "csv";
};

CommandOutput run_unravel(const UnravelArgs& args) {
  if (!(args.pi >= 0.5)) throw std::invalid_argument("pi must be >= 0.5");
  if (!(args.pi <= 1.0)) throw std::invalid_argument("pi must be <= 1");
  const auto params = lemons::MarketParams::checked(args.pi, true);
  const auto trace = lemons::unravel_trace(params, args.tol, args.max_rounds);

  CommandOutput out;
  out.command = "unravel";
  out.payload = args.format == "json" ? lemons::to_json(trace) : lemons::to_csv(trace);
  out.params = {{"pi", lemons::fmt12(args.pi)},
                {"tol", lemons::fmt12(args.tol)},
                {"max_rounds", lemons::fmt_int(args.max_rounds)},
                {"format", quoted(args.format)}};
  return out;
}

struct EqArgs {
  double p = 1.0;
  double c = 0.0;
  std::string selection = "dmv";
  std::string format = "json";
};

CommandOutput run_eq(const EqArgs& args) {
  const auto selection = args.selection == "pessimistic"
                             ? lemons::Selection::kPessimistic
                             : lemons::Selection::kDmvPreferred;
  const auto eq = lemons::noisy_equilibrium({args.p, args.c}, selection);

  CommandOutput out;
  out.command = "eq";
  out.payload = args.format == "csv" ? lemons::to_csv(eq) : lemons::to_json(eq);
  out.params = {{"p", lemons::fmt12(args.p)},
                {"c", lemons::fmt12(args.c)},
                {"selection", quoted(args.selection)},
                {"format", quoted(args.format)}};
  return out;
}

struct CurveArgs {
  double p_from = 0.01;
  double p_to = 1.0;
  double p_step = 0.01;
};

CommandOutput run_curve(const CurveArgs& args) {
  if (!(args.p_from > 0.0 && args.p_from <= args.p_to && args.p_to <= 1.0)) {
    throw std::invalid_argument("require 0 < p-from <= p-to <= 1");
  }
  if (!(args.p_step > 0.0)) {
    throw std::invalid_argument("p-step must be positive");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    double p = args.p_from + i * args.p_step;
    if (p > args.p_to + args.p_step * 1e-9) break;
    grid.push_back(std::min(p, args.p_to));
  }
  const auto points = lemons::profit_curve(grid);

  CommandOutput out;
  out.command = "curve";
  out.payload = lemons::to_csv(points);
  out.params = {{"p_from", lemons::fmt12(args.p_from)},
                {"p_to", lemons::fmt12(args.p_to)},
                {"p_step", lemons::fmt12(args.p_step)}};
  return out;
}

struct SimulateArgs {
  double p = 1.0;
  double c = 0.0;
  int n = 100000;
  std::uint64_t seed = 0;
  int iters = 500;
  double tol = 1e-9;
  std::string init = "half";
};

CommandOutput run_simulate(const SimulateArgs& args) {
  lemons::SimulationConfig config;
  config.n_sellers = args.n;
  config.seed = args.seed;
  config.max_iterations = args.iters;
  config.tol = args.tol;

  const lemons::SignalPolicy policy{args.p, args.c};

  CommandOutput out;
  out.command = "simulate";
  out.seed_value = lemons::fmt_uint(args.seed);
  out.params = {{"p", lemons::fmt12(args.p)},
                {"c", lemons::fmt12(args.c)},
                {"n", lemons::fmt_int(args.n)},
                {"seed", lemons::fmt_uint(args.seed)},
                {"iters", lemons::fmt_int(args.iters)},
                {"tol", lemons::fmt12(args.tol)},
                {"init", quoted(args.init)}};

  if (args.init == "both") {
    config.initial_theta_hat = 0.0;
    const auto report_zero = lemons::simulate_market(policy, config);
    config.initial_theta_hat = 0.5;
    const auto report_half = lemons::simulate_market(policy, config);
    out.payload = "{\n  \"init\": \"both\",\n  \"runs\": [\n";
    out.payload += indent_block(lemons::to_json(report_zero), "    ") + ",\n";
    out.payload += indent_block(lemons::to_json(report_half), "    ") + "\n";
    out.payload += "  ]\n}\n";
    if (!report_zero.converged || !report_half.converged) {
      out.exit_code = kExitNoConvergence;
    }
  } else {
    config.initial_theta_hat = args.init == "zero" ? 0.0 : 0.5;
    const auto report = lemons::simulate_market(policy, config);
    out.payload = lemons::to_json(report);
    if (!report.converged) out.exit_code = kExitNoConvergence;
  }
  return out;
}

struct OptimizeArgs {
  double p = 1.0;
  bool numeric = false;
  double resolution = 1e-7;
};

CommandOutput run_optimize(const OptimizeArgs& args) {
  if (!(args.p > 0.0 && args.p <= 1.0)) {
    throw std::invalid_argument("p must be in (0,1]");
  }
  const auto point = lemons::curve_point(args.p);

  std::string payload = "{\n";
  payload += "  \"p\": " + lemons::fmt12(point.p) + ",\n";
  payload += "  \"c_star\": " + lemons::fmt12(point.c_star) + ",\n";
  payload += "  \"profit_star\": " + lemons::fmt12(point.profit_star) + ",\n";
  payload += "  \"q_at_optimum\": " + lemons::fmt12(point.q_at_optimum) + ",\n";
  payload += "  \"regime\": \"" + std::string(lemons::to_string(point.regime)) + "\"";
  if (args.numeric) {
    const double c_numeric = lemons::fee_star_numeric(args.p, args.resolution);
    const auto eq = lemons::noisy_equilibrium({args.p, c_numeric});
    payload += ",\n  \"c_star_numeric\": " + lemons::fmt12(c_numeric) + ",\n";
    payload += "  \"profit_star_numeric\": " + lemons::fmt12(c_numeric * (1.0 - eq.q)) + ",\n";
    payload += "  \"discrepancy\": " + lemons::fmt12(std::abs(c_numeric - point.c_star));
  }
  payload += "\n}\n";

  CommandOutput out;
  out.command = "optimize";
  out.payload = std::move(payload);
  out.params = {{"p", lemons::fmt12(args.p)},
                {"numeric", args.numeric ? "true" : "false"},
                {"resolution", lemons::fmt12(args.resolution)}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lemons: equilibria, optimal fees, and Monte Carlo checks for a "
               "used-car market with quality certification"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string out_path;     // curve only
  std::string manifest_path;

  UnravelArgs unravel_args;
  auto* unravel = app.add_subcommand("unravel", "No-certification market unraveling trace");
  unravel->add_option("--pi", unravel_args.pi, "Retention discount, in [0.5, 1]")->required();
  unravel->add_option("--tol", unravel_args.tol, "Cutoff convergence threshold");
  unravel->add_option("--max-rounds", unravel_args.max_rounds, "Iteration cap");
  unravel->add_option("--format", unravel_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  unravel->add_option("--manifest", manifest_path, "Write a run manifest to FILE");

  EqArgs eq_args;
  auto* eq = app.add_subcommand("eq", "Disclosure equilibrium for a policy (p, c)");
  eq->add_option("--p", eq_args.p, "Truth probability in [0,1]")->required();
  eq->add_option("--c", eq_args.c, "Certificate fee >= 0")->required();
  eq->add_option("--selection", eq_args.selection, "Equilibrium selection")
      ->check(CLI::IsMember({"dmv", "pessimistic"}));
  eq->add_option("--format", eq_args.format, "json or csv")
      ->check(CLI::IsMember({"csv", "json"}));
  eq->add_option("--manifest", manifest_path, "Write a run manifest to FILE");

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "Optimal fee/profit curve samples (CSV)");
  curve->add_option("--p-from", curve_args.p_from, "Grid start, in (0,1]");
  curve->add_option("--p-to", curve_args.p_to, "Grid end, in (0,1]");
  curve->add_option("--p-step", curve_args.p_step, "Grid step > 0");
  curve->add_option("--out", out_path, "Write CSV to FILE instead of stdout");
  curve->add_option("--manifest", manifest_path, "Write a run manifest to FILE");

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo market simulation report");
  simulate->add_option("--p", simulate_args.p, "Truth probability in (0,1]")->required();
  simulate->add_option("--c", simulate_args.c, "Certificate fee >= 0")->required();
  simulate->add_option("--n", simulate_args.n, "Number of sellers (>= 100)");
  simulate->add_option("--seed", simulate_args.seed, "RNG seed");
  simulate->add_option("--iters", simulate_args.iters, "Best-response iteration cap");
  simulate->add_option("--tol", simulate_args.tol, "Belief convergence threshold");
  simulate->add_option("--init", simulate_args.init, "Initial belief: zero, half, or both")
      ->check(CLI::IsMember({"zero", "half", "both"}));
  simulate->add_option("--manifest", manifest_path, "Write a run manifest to FILE");

  OptimizeArgs optimize_args;
  auto* optimize = app.add_subcommand("optimize", "Optimal fee and profit at one p");
  optimize->add_option("--p", optimize_args.p, "Truth probability in (0,1]")->required();
  optimize->add_flag("--numeric", optimize_args.numeric,
                     "Also run the independent golden-section search");
  optimize->add_option("--resolution", optimize_args.resolution, "Search bracket width");
  optimize->add_option("--manifest", manifest_path, "Write a run manifest to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    CommandOutput result;
    if (app.got_subcommand(unravel)) {
      result = run_unravel(unravel_args);
    } else if (app.got_subcommand(eq)) {
      result = run_eq(eq_args);
    } else if (app.got_subcommand(curve)) {
      result = run_curve(curve_args);
    } else if (app.got_subcommand(simulate)) {
      result = run_simulate(simulate_args);
    } else {
      result = run_optimize(optimize_args);
    }

    if (!out_path.empty()) {
      write_file(out_path, result.payload);
    } else {
      std::cout << result.payload;
    }
    if (!manifest_path.empty()) {
      write_file(manifest_path,
                 manifest_json(result.command, result.params, result.seed_value,
                               result.payload));
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
}
