#include "lemons/serialize.hpp"

#include "lemons/textio.hpp"

namespace lemons {

namespace {

std::string json_array(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += fmt12(values[i]);
  }
  out += "]";
  return out;
}

const char* bool_str(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string to_csv(const UnravelingTrace& trace) {
  std::string out = "round,cutoff,buyer_offer\n";
  for (std::size_t n = 0; n < trace.cutoffs.size(); ++n) {
    out += fmt_int(static_cast<long long>(n));
    out += ',';
    out += fmt12(trace.cutoffs[n]);
    out += ',';
    out += fmt12(trace.buyer_offers[n]);
    out += '\n';
  }
  out += "# converged=";
  out += bool_str(trace.converged);
  out += " rounds=" + fmt_int(trace.rounds);
  out += " limit=" + fmt12(trace.limit);
  out += '\n';
  return out;
}

std::string to_json(const UnravelingTrace& trace) {
  std::string out = "{\n";
  out += "  \"rounds\": " + fmt_int(trace.rounds) + ",\n";
  out += "  \"converged\": " + std::string(bool_str(trace.converged)) + ",\n";
  out += "  \"limit\": " + fmt12(trace.limit) + ",\n";
  out += "  \"cutoffs\": " + json_array(trace.cutoffs) + ",\n";
  out += "  \"buyer_offers\": " + json_array(trace.buyer_offers) + "\n";
  out += "}\n";
  return out;
}

std::string to_json(const DisclosureEquilibrium& eq) {
  std::string out = "{\n";
  out += "  \"p\": " + fmt12(eq.p) + ",\n";
  out += "  \"c\": " + fmt12(eq.c) + ",\n";
  out += "  \"theta_hat\": " + fmt12(eq.theta_hat) + ",\n";
  out += "  \"q\": " + fmt12(eq.q) + ",\n";
  out += "  \"e_disclosed\": " + fmt12(eq.e_disclosed) + ",\n";
  out += "  \"regime\": \"" + std::string(to_string(eq.regime)) + "\",\n";
  out += "  \"selection_note\": \"" + json_escape(eq.selection_note) + "\"\n";
  out += "}\n";
  return out;
}

std::string to_csv(const DisclosureEquilibrium& eq) {
  std::string out = "p,c,theta_hat,q,e_disclosed,regime,selection_note\n";
  out += fmt12(eq.p) + ',' + fmt12(eq.c) + ',' + fmt12(eq.theta_hat) + ',' +
         fmt12(eq.q) + ',' + fmt12(eq.e_disclosed) + ',' + to_string(eq.regime) +
         ",\"" + eq.selection_note + "\"\n";
  return out;
}

std::string to_csv(const std::vector<PolicyCurvePoint>& points) {
  std::string out = "p,c_star,profit_star,q_at_optimum,regime\n";
  for (const auto& point : points) {
    out += fmt12(point.p) + ',' + fmt12(point.c_star) + ',' +
           fmt12(point.profit_star) + ',' + fmt12(point.q_at_optimum) + ',' +
           to_string(point.regime) + '\n';
  }
  return out;
}

std::string to_json(const SimulationReport& report) {
  std::string out = "{\n";
  out += "  \"p\": " + fmt12(report.p) + ",\n";
  out += "  \"c\": " + fmt12(report.c) + ",\n";
  out += "  \"theta_hat_emp\": " + fmt12(report.theta_hat_emp) + ",\n";
  out += "  \"q_emp\": " + fmt12(report.q_emp) + ",\n";
  out += "  \"e_disclosed_emp\": " + fmt12(report.e_disclosed_emp) + ",\n";
  out += "  \"mean_payment_emp\": " + fmt12(report.mean_payment_emp) + ",\n";
  out += "  \"dmv_profit_emp\": " + fmt12(report.dmv_profit_emp) + ",\n";
  out += "  \"dmv_profit_analytic\": " + fmt12(report.dmv_profit_analytic) + ",\n";
  out += "  \"abs_error\": " + fmt12(report.abs_error) + ",\n";
  out += "  \"iterations\": " + fmt_int(report.iterations) + ",\n";
  out += "  \"converged\": " + std::string(bool_str(report.converged)) + ",\n";
  out += "  \"attractor\": \"" + std::string(to_string(report.attractor)) + "\",\n";
  out += "  \"welfare\": {\n";
  out += "    \"dmv_profit\": " + fmt12(report.welfare.dmv_profit) + ",\n";
  out += "    \"seller_surplus_gross\": " + fmt12(report.welfare.seller_surplus_gross) + ",\n";
  out += "    \"certification_spend\": " + fmt12(report.welfare.certification_spend) + ",\n";
  out += "    \"buyer_misinformation\": " + fmt12(report.welfare.buyer_misinformation) + ",\n";
  out += "    \"fake_signal_rate\": " + fmt12(report.welfare.fake_signal_rate) + ",\n";
  out += "    \"trade_volume\": " + fmt12(report.welfare.trade_volume) + "\n";
  out += "  },\n";
  out += "  \"ci_half_width\": {\n";
  out += "    \"theta_hat\": " + fmt12(report.ci_half_width.theta_hat) + ",\n";
  out += "    \"q\": " + fmt12(report.ci_half_width.q) + ",\n";
  out += "    \"dmv_profit\": " + fmt12(report.ci_half_width.dmv_profit) + ",\n";
  out += "    \"mean_payment\": " + fmt12(report.ci_half_width.mean_payment) + "\n";
  out += "  },\n";
  out += "  \"payment_bins\": [\n";
  for (std::size_t i = 0; i < report.payment_bins.size(); ++i) {
    const auto& bin = report.payment_bins[i];
    out += "    {\"theta_lo\": " + fmt12(bin.theta_lo) +
           ", \"theta_hi\": " + fmt12(bin.theta_hi) +
           ", \"draws\": " + fmt_int(bin.draws) +
           ", \"mean_payment\": " + fmt12(bin.mean_payment) +
           ", \"predicted\": " + fmt12(bin.predicted) +
           ", \"ci_half_width\": " + fmt12(bin.ci_half_width) + "}";
    out += i + 1 < report.payment_bins.size() ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"n_sellers\": " + fmt_int(report.n_sellers) + ",\n";
  out += "  \"seed\": " + fmt_uint(report.seed) + ",\n";
  out += "  \"initial_theta_hat\": " + fmt12(report.initial_theta_hat) + ",\n";
  out += "  \"signal_draws_per_seller\": " + fmt_int(report.signal_draws_per_seller) + "\n";
  out += "}\n";
  return out;
}

}  // namespace lemons
