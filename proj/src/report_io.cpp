#include "asymp/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace asymp {

namespace {

using nlohmann::json;

// round to 12 significant digits so reports do not leak sub-noise decimals;
// JSON has no representation for nonfinite doubles, so those become strings
json jnum(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return json(std::strtod(buf, nullptr));
}

const char* ternary_name(Ternary t) {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    case Ternary::inconclusive: return "inconclusive";
  }
  return "?";
}

const char* series_outcome_name(SeriesOutcome s) {
  switch (s) {
    case SeriesOutcome::diverges: return "diverges";
    case SeriesOutcome::converges: return "converges";
    case SeriesOutcome::inconclusive: return "inconclusive";
  }
  return "?";
}

json jtrend(const TrendEstimate& t) {
  return {{"estimate", jnum(t.estimate)}, {"bounded_trend", t.bounded_trend}};
}

json jwindow(const std::vector<WindowPoint>& series) {
  json arr = json::array();
  for (const auto& p : series)
    arr.push_back({{"horizon", p.horizon}, {"value", jnum(p.value)}});
  return arr;
}

json jregvar_row(const RegvarRow& r) {
  return {{"ell", r.ell},          {"p", r.p},       {"ratio", jnum(r.ratio)},
          {"target", jnum(r.target)}, {"pass", r.pass}, {"diverged", r.diverged}};
}

json jseries_verdict(const SeriesVerdict& s) {
  json partials = json::array();
  for (const auto& p : s.partial_sums)
    partials.push_back({{"horizon", p.horizon}, {"value", jnum(p.value)}});
  json out = {{"verdict", series_outcome_name(s.verdict)},
              {"s_exponent", jnum(s.s_exponent)},
              {"partial_sums", partials}};
  out["bertrand_exponent"] =
      s.bertrand_exponent ? jnum(*s.bertrand_exponent) : json(nullptr);
  return out;
}

json jflat(const FlatnessFit& f) {
  return {{"theta", jnum(f.theta)},       {"c1", jnum(f.c1)},
          {"c2", jnum(f.c2)},             {"residual", jnum(f.residual)},
          {"flat", f.flat},               {"diagnostic", f.diagnostic}};
}

json jpairs(const std::vector<std::pair<double, double>>& pts, const char* a,
            const char* b) {
  json arr = json::array();
  for (const auto& [x, y] : pts) arr.push_back({{a, jnum(x)}, {b, jnum(y)}});
  return arr;
}

json jexpansion(const ExpansionFit& f) {
  json slack = json::array();
  for (double s : f.per_p_slack) slack.push_back(jnum(s));
  return {{"theta", jnum(f.theta)},
          {"C", jnum(f.C)},
          {"A", jnum(f.A)},
          {"p_max", f.p_max},
          {"per_p_slack", slack},
          {"dropped_samples", f.dropped_samples},
          {"warnings", f.warnings},
          {"fitted", f.fitted},
          {"diagnostic", f.diagnostic}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const ConditionReport& rep) {
  json lc = {{"holds_up_to_horizon", rep.lc.holds_up_to_horizon}};
  lc["first_violation"] =
      rep.lc.first_violation ? json(*rep.lc.first_violation) : json(nullptr);
  return dump({{"lc", lc},
               {"dc", jtrend(rep.dc)},
               {"mg", jtrend(rep.mg)},
               {"snq", jtrend(rep.snq)},
               {"quotients_to_infinity", rep.quotients_to_infinity}});
}

std::string to_json(const IndexReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.regvar_table) rows.push_back(jregvar_row(r));
  return dump({{"omega_estimate", jnum(rep.omega_estimate)},
               {"omega_window_series", jwindow(rep.omega_window_series)},
               {"lambda_m", jnum(rep.lambda_m)},
               {"lambda_pm", jnum(rep.lambda_pm)},
               {"b_limit_estimate", jnum(rep.b_limit_estimate)},
               {"b_limit_converged", rep.b_limit_converged},
               {"regvar_table", rows}});
}

std::string to_json(const ProximateOrderReport& rep) {
  json out = {{"continuity_pass", rep.continuity_pass},
              {"nonnegative_pass", rep.nonnegative_pass},
              {"limit_pass", rep.limit_pass},
              {"limit_tail_deviation", jnum(rep.limit_tail_deviation)},
              {"derivative_pass", rep.derivative_pass},
              {"derivative_tail_max", jnum(rep.derivative_tail_max)},
              {"all_pass", rep.all_pass()}};
  out["continuity_fail_index"] =
      rep.continuity_fail_index ? json(*rep.continuity_fail_index) : json(nullptr);
  return dump(out);
}

std::string to_json(const AdmissibilityBand& band) {
  return dump({{"a_est", jnum(band.a_est)},
               {"b_est", jnum(band.b_est)},
               {"bounded", band.bounded}});
}

std::string to_json(const QuasiVerdict& verdict) {
  json out = {{"quasianalytic", ternary_name(verdict.quasianalytic)},
              {"reason", verdict.reason}};
  out["series"] = verdict.series ? jseries_verdict(*verdict.series) : json(nullptr);
  return dump(out);
}

std::string to_json(const GrowthReport& rep) {
  return dump({{"iii", check_status_name(rep.iii)},
               {"iii_margin", jnum(rep.iii_margin)},
               {"small_end_value", jnum(rep.small_end_value)},
               {"iv", check_status_name(rep.iv)},
               {"iv_margin", jnum(rep.iv_margin)},
               {"v", check_status_name(rep.v)},
               {"v_margin", jnum(rep.v_margin)},
               {"v_in_r", check_status_name(rep.v_in_r)},
               {"v_in_r_margin", jnum(rep.v_in_r_margin)}});
}

std::string to_json(const HomogeneityReport& rep) {
  json series = json::array();
  for (const auto& p : rep.series)
    series.push_back({{"r", jnum(p.r)}, {"deviation", jnum(p.deviation)}});
  return dump({{"deviation", jnum(rep.deviation)}, {"series", series}});
}

std::string to_json(const MvBounds& bounds) {
  return dump({{"a_est", jnum(bounds.a_est)},
               {"b_est", jnum(bounds.b_est)},
               {"t0_used", jnum(bounds.t0_used)},
               {"bounded", bounds.bounded}});
}

std::string to_json(const FlatnessFit& fit) { return dump(jflat(fit)); }

std::string to_json(const PropagationTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"delta", jnum(r.delta)},
                    {"k2_fitted", jnum(r.k2_fitted)},
                    {"k2_predicted_bound", jnum(r.k2_predicted_bound)},
                    {"satisfied", r.satisfied}});
  return dump({{"flat_fit", jflat(table.flat_fit)},
               {"rows", rows},
               {"all_satisfied", table.all_satisfied},
               {"aborted", table.aborted},
               {"diagnostic", table.diagnostic}});
}

std::string to_json(const TwoDirectionResult& res) {
  json fits = json::array();
  for (const auto& f : res.fits) fits.push_back(jflat(f));
  json out = {{"k1", jnum(res.k1)},
              {"k2", jnum(res.k2)},
              {"uniform", res.uniform},
              {"fits", fits}};
  out["failing_direction"] =
      res.failing_direction ? jnum(*res.failing_direction) : json(nullptr);
  return dump(out);
}

std::string to_json(const PlCheckResult& res) {
  return dump({{"max_boundary_log", jnum(res.max_boundary_log)},
               {"max_interior_log", jnum(res.max_interior_log)},
               {"satisfied", res.satisfied}});
}

std::string to_json(const ProofRecipe& recipe) {
  return dump({{"a", {{"re", jnum(recipe.a.real())}, {"im", jnum(recipe.a.imag())}}},
               {"d2", jnum(recipe.d2)},
               {"modulus", jnum(recipe.modulus)},
               {"argument", jnum(recipe.argument)}});
}

std::string to_json(const WasowDemo& demo) {
  return dump({{"flat_fit_on_axis", jflat(demo.flat_fit_on_axis)},
               {"oscillation_detected", demo.oscillation_detected},
               {"derivative_samples", jpairs(demo.derivative_samples, "r", "fprime")},
               {"cos_zero_samples", jpairs(demo.cos_zero_samples, "r", "fprime")},
               {"sin_zero_samples", jpairs(demo.sin_zero_samples, "r", "fprime")}});
}

std::string to_json(const ExpansionFit& fit) { return dump(jexpansion(fit)); }

std::string to_json(const ExtensionResult& res) {
  json rows = json::array();
  for (const auto& r : res.rows) rows.push_back(jexpansion(r));
  return dump({{"rows", rows}, {"success", res.success}, {"diagnostic", res.diagnostic}});
}

std::string regvar_to_csv(std::span<const RegvarRow> rows) {
  std::string csv = "ell,p,ratio,target,pass\n";
  char buf[112];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.12g,%.12g,%d\n", r.ell, r.p, r.ratio,
                  r.target, r.pass ? 1 : 0);
    csv += buf;
  }
  return csv;
}

std::string propagation_rows_to_csv(const PropagationTable& table) {
  std::string csv = "delta,k2_fitted,k2_predicted_bound,satisfied\n";
  char buf[112];
  for (const auto& r : table.rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%d\n", r.delta, r.k2_fitted,
                  r.k2_predicted_bound, r.satisfied ? 1 : 0);
    csv += buf;
  }
  return csv;
}

std::string pairs_to_csv(const std::string& header,
                         std::span<const std::pair<double, double>> points) {
  std::string csv = header;
  if (csv.empty() || std::count(csv.begin(), csv.end(), ',') != 1)
    throw std::invalid_argument("pairs_to_csv header must name exactly two columns");
  csv += '\n';
  char buf[64];
  for (const auto& [x, y] : points) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", x, y);
    csv += buf;
  }
  return csv;
}

}  // namespace asymp
