#include "asymp/assoc_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace asymp {

AssociatedFunction::AssociatedFunction(const WeightSequence& w)
    : log_terms_(w.log_terms().begin(), w.log_terms().end()),
      breakpoints_(log_quotients(w)),
      horizon_(w.horizon()) {
  for (std::size_t p = 0; p + 1 < breakpoints_.size(); ++p)
    if (breakpoints_[p + 1] < breakpoints_[p])
      throw std::domain_error("associated function needs a log-convex sequence");
}

double AssociatedFunction::value_log(double log_t) const {
  if (log_t > breakpoints_.back())
    throw std::out_of_range("t beyond m_{horizon-1}: raise the horizon");
  // segment index = number of breakpoints <= log_t (right segment at a tie)
  std::size_t p = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), log_t) -
                  breakpoints_.begin();
  if (p == 0) return 0.0;  // t < m_0, and p * log_t would be NaN at t = 0
  return static_cast<double>(p) * log_t - log_terms_[p];
}

double AssociatedFunction::value(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("M(t) needs t >= 0");
  if (t == 0.0) return 0.0;
  return value_log(std::log(t));
}

double AssociatedFunction::d_m(double t) const {
  if (!(t > 1.0)) throw std::domain_error("d_M(t) needs t > 1");
  double m = value(t);
  if (!(m > 0.0)) throw std::domain_error("d_M(t) needs M(t) > 0");
  return std::log(m) / std::log(t);
}

double m_of_t_bruteforce(const WeightSequence& w, double t, std::size_t P) {
  if (P > w.horizon()) throw std::domain_error("P beyond sequence horizon");
  if (!(t >= 0.0)) throw std::domain_error("M(t) needs t >= 0");
  if (t == 0.0) return 0.0;
  const double log_t = std::log(t);
  const auto lt = w.log_terms();
  double best = 0.0;  // p = 0 term
  for (std::size_t p = 1; p <= P; ++p)
    best = std::max(best, static_cast<double>(p) * log_t - lt[p]);
  return best;
}

double flat_bound(const AssociatedFunction& a, double c1, double c2, double r) {
  if (!(c1 > 0.0) || !(c2 > 0.0)) throw std::invalid_argument("flat bound needs c1, c2 > 0");
  if (!(r > 0.0)) throw std::invalid_argument("flat bound needs r > 0");
  return std::log(c1) - a.value_log(-std::log(c2) - std::log(r));
}

ProximateOrderSpec ProximateOrderSpec::closed_form(double rho, double b) {
  if (!(rho >= 0.0)) throw std::invalid_argument("rho limit must be nonnegative");
  ProximateOrderSpec spec;
  spec.closed_form_ = true;
  spec.rho_ = rho;
  spec.b_ = b;
  return spec;
}

ProximateOrderSpec ProximateOrderSpec::sampled(std::vector<std::pair<double, double>> samples,
                                               double rho_limit) {
  if (samples.size() < 2) throw std::invalid_argument("need at least 2 samples");
  for (std::size_t i = 0; i + 1 < samples.size(); ++i)
    if (!(samples[i].first < samples[i + 1].first))
      throw std::invalid_argument("sample radii must be strictly increasing");
  ProximateOrderSpec spec;
  spec.closed_form_ = false;
  spec.rho_ = rho_limit;
  spec.samples_ = std::move(samples);
  return spec;
}

double ProximateOrderSpec::eval(double r) const {
  if (closed_form_) {
    if (!(r > std::exp(1.0))) throw std::domain_error("closed-form rho(r) needs r > e");
    return rho_ + b_ * std::log(std::log(r)) / std::log(r);
  }
  if (r < samples_.front().first || r > samples_.back().first)
    throw std::domain_error("r outside sampled range");
  auto it = std::lower_bound(samples_.begin(), samples_.end(), r,
                             [](const auto& s, double x) { return s.first < x; });
  if (it->first == r) return it->second;
  auto hi = it, lo = it - 1;
  double t = (std::log(r) - std::log(lo->first)) / (std::log(hi->first) - std::log(lo->first));
  return lo->second + t * (hi->second - lo->second);
}

ProximateOrderReport proximate_order_check(const ProximateOrderSpec& spec,
                                           std::span<const double> r_grid, double tol,
                                           double jump_tol) {
  const std::size_t n = r_grid.size();
  if (n < 16) throw std::domain_error("need at least 16 grid points for finite differences");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(r_grid[i] < r_grid[i + 1])) throw std::domain_error("r grid must be increasing");

  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = spec.eval(r_grid[i]);

  ProximateOrderReport rep;

  rep.continuity_pass = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(rho[i + 1] - rho[i]) > jump_tol) {
      rep.continuity_pass = false;
      rep.continuity_fail_index = i + 1;
      break;
    }
  }

  rep.nonnegative_pass = true;
  for (double v : rho) rep.nonnegative_pass = rep.nonnegative_pass && v >= 0.0;

  rep.limit_tail_deviation = 0.0;
  for (std::size_t i = n / 2; i < n; ++i)
    rep.limit_tail_deviation =
        std::max(rep.limit_tail_deviation, std::abs(rho[i] - spec.rho_limit()));
  rep.limit_pass = rep.limit_tail_deviation < tol;

  rep.derivative_tail_max = 0.0;
  for (std::size_t i = n / 2; i + 1 < n; ++i) {
    double deriv = (rho[i + 1] - rho[i - 1]) / (r_grid[i + 1] - r_grid[i - 1]);
    double q = r_grid[i] * deriv * std::log(r_grid[i]);
    rep.derivative_tail_max = std::max(rep.derivative_tail_max, std::abs(q));
  }
  rep.derivative_pass = rep.derivative_tail_max < tol;
  return rep;
}

AdmissibilityBand admissibility_check(const AssociatedFunction& a,
                                      const ProximateOrderSpec& spec,
                                      std::span<const double> t_grid, double drift_tol) {
  const std::size_t n = t_grid.size();
  if (n < 8) throw std::domain_error("need at least 8 grid points");

  std::vector<double> g;
  for (std::size_t i = n / 2; i < n; ++i) {
    double t = t_grid[i];
    g.push_back(std::log(t) * (spec.eval(t) - a.d_m(t)));
  }

  AdmissibilityBand band;
  band.a_est = *std::min_element(g.begin(), g.end());
  band.b_est = *std::max_element(g.begin(), g.end());

  double q3 = 0.0, q4 = 0.0;
  for (std::size_t i = 0; i < g.size() / 2; ++i) q3 = std::max(q3, std::abs(g[i]));
  for (std::size_t i = g.size() / 2; i < g.size(); ++i) q4 = std::max(q4, std::abs(g[i]));
  band.bounded = (q4 - q3) <= drift_tol;
  return band;
}

}  // namespace asymp
