#include <cmath>

#include "commands.hpp"
#include "sharplp/means.hpp"
#include "sharplp/proof_audit.hpp"

namespace sharplp::cli {

namespace {

const std::vector<double> kDefaultCGrid{-3, -1, -0.2, 0.05, 0.2, 0.35, 0.45, 0.55, 0.7, 0.9, 1.3, 2, 3.5, 8};

Json to_json(const SignChangePattern& s) {
  Json crossings = Json::array();
  for (const Crossing& c : s.crossings) {
    crossings.push_back({{"bracket_lo", c.bracket_lo},
                         {"bracket_hi", c.bracket_hi},
                         {"sign_before", c.sign_before},
                         {"sign_after", c.sign_after}});
  }
  return {{"overall", to_string(s.overall)}, {"crossings", std::move(crossings)}};
}

Json to_json(const FunctionAudit& a) {
  Json j;
  j["name"] = to_string(a.function);
  j["expected"] = to_string(a.expected);
  j["observed"] = to_json(a.observed);
  j["match"] = a.match;
  j["scope"] = a.scope;
  return j;
}

Json to_json(const ChainReport& r) {
  Json j;
  j["c"] = r.c;
  j["p"] = r.p;
  j["grid_size"] = r.grid_size;
  Json audited = Json::array();
  for (const auto& a : r.audited) audited.push_back(to_json(a));
  j["functions"] = std::move(audited);
  Json info = Json::array();
  for (const auto& a : r.informational) info.push_back(to_json(a));
  j["informational"] = std::move(info);
  j["fraction_lemma_holds"] = r.fraction_lemma_holds;
  const EndpointIdentities& e = r.endpoints;
  j["endpoints"] = {{"v_at_1", e.v_at_1},
                    {"v_prime_at_1", e.v_prime_at_1},
                    {"v_dprime_at_1", e.v_dprime_at_1},
                    {"v_tprime_at_1", e.v_tprime_at_1},
                    {"v_tprime_expected", e.v_tprime_expected},
                    {"h_near_1", e.h_at_1},
                    {"w_at_1", e.w_at_1},
                    {"w_expected", e.w_expected},
                    {"holds", e.holds}};
  j["all_match"] = r.all_match();
  return j;
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

CommandOutput run_audit(const CommandConfig& cfg) {
  const std::vector<double> cs = cfg.c_values.empty() ? kDefaultCGrid : cfg.c_values;
  const int grid = cfg.points.value_or(10000);
  if (grid < 1000) throw UsageError("--points must be >= 1000 for sign scans");
  for (double c : cs) {
    if (c == 0 || c == 0.5 || c == 1 || !std::isfinite(c)) {
      throw UsageError("c = " + format_number(c) + " has no asserted pattern");
    }
  }
  CommandOutput out;
  Json arr = Json::array();
  for (double c : cs) {
    const ChainReport r = audit_chain(ChainContext::from_c(c), static_cast<std::size_t>(grid));
    out.passed = out.passed && r.all_match();
    arr.push_back(to_json(r));
  }
  out.text = dump(arr);
  return out;
}

CommandOutput run_sharpness(const CommandConfig& cfg) {
  const std::vector<double> ps = cfg.p_list.empty() ? std::vector<double>{3.0} : cfg.p_list;
  const double r = cfg.r.value_or(1.1);
  if (!(r > 0)) throw UsageError("--r must be > 0");
  for (double p : ps) {
    if (p == 0 || p == 1 || p == 2) throw UsageError("sharpness needs p not in {0, 1, 2}");
  }
  CommandOutput out;
  Json arr = Json::array();
  for (double p : ps) {
    const SharpnessResult s = sharpness_probe(p, r);
    const bool expected = sharpness_witness_expected(p, r);
    const bool witness_ok = s.witness_s.has_value() == expected;
    const bool slope_ok = std::abs(s.slope_measured - s.slope_predicted) <= 0.01 * std::abs(s.slope_predicted) + 1e-6;
    out.passed = out.passed && witness_ok && slope_ok;
    Json j;
    j["p"] = s.p;
    j["r"] = s.r;
    j["slope_predicted"] = s.slope_predicted;
    j["slope_measured"] = s.slope_measured;
    j["witness_s"] = optional_json(s.witness_s);
    j["witness_value"] = optional_json(s.witness_value);
    j["violation_edge"] = optional_json(s.violation_edge);
    j["claimed_sign"] = s.claimed_sign;
    j["witness_expected"] = expected;
    j["consistent"] = witness_ok && slope_ok;
    arr.push_back(std::move(j));
  }
  out.text = dump(arr.size() == 1 ? arr.front() : arr);
  return out;
}

}  // namespace sharplp::cli
