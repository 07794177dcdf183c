#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "asymp/sequences.hpp"

namespace asymp {

// Piecewise-linear (in log t) form of M(t) = sup_p log(t^p / M_p) for a
// log-convex sequence: segment p applies on [m_{p-1}, m_p) and the quotients
// are the breakpoints.  Values of t past m_{horizon-1} are a hard range error;
// the sup would silently saturate there and return garbage.
class AssociatedFunction {
 public:
  explicit AssociatedFunction(const WeightSequence& w);

  double value(double t) const;          // M(t), t >= 0
  double value_log(double log_t) const;  // M(e^log_t); use when t overflows double
  double d_m(double t) const;            // log M(t) / log t, needs M(t) > 0 and t > 1
  double max_log_t() const { return breakpoints_.back(); }  // log m_{horizon-1}
  std::size_t horizon() const { return horizon_; }

 private:
  std::vector<double> log_terms_;
  std::vector<double> breakpoints_;  // log m_p, nondecreasing
  std::size_t horizon_;
};

// Independent oracle: direct max over p = 0..P of (p log t - log M_p).
double m_of_t_bruteforce(const WeightSequence& w, double t, std::size_t P);

// log c1 - M(1/(c2 r)): the log of the flat-function bound c1 e^{-M(1/(c2 r))}.
double flat_bound(const AssociatedFunction& a, double c1, double c2, double r);

// A proximate order candidate: either rho(r) = rho + b log log r / log r
// (defined for r > e) or a sampled table interpolated linearly in log r.
class ProximateOrderSpec {
 public:
  static ProximateOrderSpec closed_form(double rho, double b);
  // samples = (r, rho(r)) with r strictly increasing
  static ProximateOrderSpec sampled(std::vector<std::pair<double, double>> samples,
                                    double rho_limit);

  double eval(double r) const;
  double rho_limit() const { return rho_; }
  bool is_closed_form() const { return closed_form_; }

 private:
  ProximateOrderSpec() = default;
  bool closed_form_ = true;
  double rho_ = 0.0;
  double b_ = 0.0;
  std::vector<std::pair<double, double>> samples_;
};

struct ProximateOrderReport {
  bool continuity_pass = false;  // no jump between adjacent grid values
  std::optional<std::size_t> continuity_fail_index;
  bool nonnegative_pass = false;           // rho(r) >= 0 on the grid
  bool limit_pass = false;                 // tail deviation from rho below tol
  double limit_tail_deviation = 0.0;
  bool derivative_pass = false;            // tail max of r rho'(r) log r below tol
  double derivative_tail_max = 0.0;
  bool all_pass() const {
    return continuity_pass && nonnegative_pass && limit_pass && derivative_pass;
  }
};

// Grid check of the defining conditions: nonnegativity, convergence to the
// limit order, and vanishing of r rho'(r) log r (central differences).
// Needs at least 16 increasing grid points.
ProximateOrderReport proximate_order_check(const ProximateOrderSpec& spec,
                                           std::span<const double> r_grid, double tol = 0.2,
                                           double jump_tol = 0.1);

struct AdmissibilityBand {
  double a_est = 0.0;  // min of log t (rho(t) - d_M(t)) over the tail half
  double b_est = 0.0;  // max of the same
  bool bounded = false;
};

// Checks that g(t) = log t (rho(t) - d_M(t)) stays in a band: bounded fails
// when the last quarter of the grid drifts beyond the previous quarter by
// more than drift_tol.
AdmissibilityBand admissibility_check(const AssociatedFunction& a,
                                      const ProximateOrderSpec& spec,
                                      std::span<const double> t_grid,
                                      double drift_tol = 0.5);

}  // namespace asymp
