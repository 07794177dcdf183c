#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "asymp/sequences.hpp"

namespace asymp {

struct WindowPoint {
  std::size_t horizon = 0;
  double value = 0.0;
};

struct TailEstimate {
  double estimate = 0.0;
  std::vector<WindowPoint> series;  // same estimator at dyadic sub-horizons
};

// liminf estimate of log(m_p)/log(p): minimum over the final `window` quotient
// indices.  Requires window >= 10 and horizon >= 10*window.  The series lets
// callers see whether the tail value has settled.
TailEstimate omega(const WeightSequence& w, std::size_t window);

// limsup estimate of log(n)/log(c_n) over the final `window` indices, for a
// sequence given as log(c_n).  The tail must be nondecreasing and growing,
// otherwise the limsup estimate is meaningless and a domain error is thrown.
double exponent_of_convergence(std::span<const double> log_c, std::size_t window);

struct BLimit {
  double estimate = 0.0;  // log m_p - log(M_p)/p at the end of the window
  bool converged = false;  // drift across the window stayed small
};
BLimit b_limit(const WeightSequence& w, std::size_t window);

struct RegvarRow {
  std::size_t ell = 0;
  std::size_t p = 0;
  double ratio = 0.0;   // m_{ell*p} / m_p
  double target = 0.0;  // ell^omega
  bool pass = false;    // |ratio/target - 1| < tol
  bool diverged = false;  // ratio off target by more than a factor 1e6
};

// Ratio test m_{ell*p}/m_p vs ell^omega for each multiplier/probe pair.
// Requires ell >= 1 and ell*p <= horizon-1 for every pair.
std::vector<RegvarRow> regvar_test(const WeightSequence& w,
                                   std::span<const std::size_t> multipliers,
                                   std::span<const std::size_t> probes,
                                   double tol = 1e-3);

struct IndexReport {
  double omega_estimate = 0.0;
  std::vector<WindowPoint> omega_window_series;
  double lambda_m = 0.0;       // exponent of convergence of (m_p)
  double lambda_pm = 0.0;      // exponent of convergence of ((p+1) m_p)
  double b_limit_estimate = 0.0;
  bool b_limit_converged = false;
  std::vector<RegvarRow> regvar_table;
};

// Bundles the estimators above; window = 0 picks horizon/10.
IndexReport index_report(const WeightSequence& w, std::size_t window = 0);

}  // namespace asymp
