#include "swdon/report.hpp"

namespace swdon {

ReportJson report_header(const std::string& command, const std::vector<std::string>& argv,
                         const std::string& manifold) {
  ReportJson out;
  out["schema_version"] = 1;
  out["command"] = {{"name", command}, {"argv", argv}};
  out["manifold"] = manifold;
  return out;
}

ReportJson to_json(const Rational& v) { return to_string(v); }

ReportJson to_json(const CohClass& c) {
  ReportJson out = ReportJson::array();
  for (Index i = 0; i < c.size(); ++i) {
    const Integer& v = c[i];
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
      out.push_back(v.convert_to<std::int64_t>());
    else
      out.push_back(v.str());
  }
  return out;
}

ReportJson to_json(const Jet& jet) {
  ReportJson out;
  ReportJson vars = ReportJson::array();
  for (const auto& v : jet.variables) vars.push_back(to_string(v));
  out["variables"] = vars;
  out["order"] = jet.order;
  ReportJson terms = ReportJson::array();
  for (const auto& [mono, coeff] : jet.coefficients) terms.push_back({{"exponents", mono}, {"coefficient", to_json(coeff)}});
  out["terms"] = terms;
  out["zero"] = jet.is_zero();
  return out;
}

ReportJson to_json(const VanishingOrder& order) {
  switch (order.kind) {
    case VanishingOrder::Kind::Exact: return {{"kind", "exact"}, {"value", order.value}};
    case VanishingOrder::Kind::AtLeast: return {{"kind", "at-least"}, {"value", order.value}};
    case VanishingOrder::Kind::ZeroSeries: return {{"kind", "zero-series"}};
  }
  return nullptr;
}

ReportJson to_json(const ValidationReport& report) {
  ReportJson failures = ReportJson::array();
  for (const auto& f : report.failures)
    failures.push_back({{"check", f.check}, {"detail", f.detail}, {"code", error_code_name(f.code)}});
  return failures;
}

ReportJson to_json(const SstReport& r) {
  ReportJson out;
  out["verdict"] = verdict_name(r.verdict);
  out["c"] = to_json(r.c);
  out["w"] = to_json(r.w);
  out["cap"] = r.cap;
  out["vanishing_order"] = to_json(r.order);
  out["parity"] = parity_name(r.parity);
  out["expected_parity"] = parity_name(r.expected_parity);
  if (r.pair) out["hyperbolic_pair"] = {to_json(r.pair->e1), to_json(r.pair->e2)};
  if (r.lambda0) out["lambda0"] = to_json(*r.lambda0);
  if (r.lambda1) out["lambda1"] = to_json(*r.lambda1);
  ReportJson checks = ReportJson::array();
  for (const auto& c : r.checks)
    checks.push_back({{"m", c.m}, {"d", c.d}, {"vanishing_branch", c.vanishing_branch}, {"formula", to_json(c.formula)}});
  out["checks"] = checks;
  out["trace_consistent"] = r.trace_consistent;
  out["trace"] = r.trace;
  return out;
}

ReportJson to_json(const DvanishReport& r) {
  ReportJson out;
  out["verdict"] = verdict_name(r.verdict);
  out["c"] = to_json(r.c);
  out["w"] = to_json(r.w);
  out["residue_mod_8"] = r.residue.str();
  if (r.lambda) {
    out["lambda"] = to_json(*r.lambda);
    out["r"] = to_json(r.r);
    out["i"] = to_json(r.i);
  }
  ReportJson steps = ReportJson::array();
  for (const auto& s : r.steps) {
    ReportJson step{{"d", s.d}, {"mechanism", mechanism_name(s.mechanism)}, {"zero", s.zero}};
    if (!s.formula_values.empty()) {
      ReportJson values = ReportJson::array();
      for (const auto& v : s.formula_values) values.push_back(to_json(v));
      step["formula_values"] = values;
    }
    steps.push_back(step);
  }
  out["steps"] = steps;
  out["trace"] = r.trace;
  return out;
}

ReportJson to_json(const BoundReport& r) {
  ReportJson out;
  out["verdict"] = verdict_name(r.verdict);
  out["applicable"] = r.applicable;
  if (!r.reason.empty()) out["reason"] = r.reason;
  out["b"] = r.b;
  out["c"] = to_json(r.c);
  out["half_c"] = to_json(r.half_c);
  out["c1_squared"] = r.c1_sq.str();
  out["chi_h"] = to_json(r.chi_h);
  out["strict"] = r.strict;
  out["strict_holds"] = r.strict_holds;
  out["non_strict_holds"] = r.non_strict_holds;
  out["c1_squared_line_printed_holds"] = r.printed_line_holds;
  out["c1_squared_line_rearranged_holds"] = r.rearranged_line_holds;
  return out;
}

ReportJson to_json(const RegionDescription& region) {
  ReportJson out;
  out["r_line"] = {{"slope", -1}, {"intercept", to_json(region.r_intercept)}};
  out["i_line"] = {{"slope", 1}, {"intercept", to_json(region.i_intercept)}};
  out["intersection"] = {to_json(region.intersection_x), to_json(region.intersection_delta)};
  out["w_characteristic"] = region.w_characteristic;
  out["w_squared"] = region.w_sq.str();
  out["window"] = {{"x_min", region.window.x_min},
                   {"x_max", region.window.x_max},
                   {"delta_min", region.window.delta_min},
                   {"delta_max", region.window.delta_max}};
  ReportJson points = ReportJson::array();
  for (const auto& p : region.marked)
    points.push_back({{"lambda_sq", p.x},
                      {"delta", p.delta},
                      {"hollow", p.hollow},
                      {"inside", p.inside},
                      {"on_r_edge", p.on_r_edge}});
  out["marked_points"] = points;
  return out;
}

Rational rational_from_json(const ReportJson& node) {
  if (!node.is_string()) throw Error(ErrorCode::ParseError, "rational values are serialized as \"p/q\" strings");
  return parse_rational(node.get<std::string>());
}

}  // namespace swdon
