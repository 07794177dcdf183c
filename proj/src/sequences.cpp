#include "asymp/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "asymp/grids.hpp"

namespace asymp {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("linspace needs at least 2 points");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("logspace needs 0 < lo < hi");
  auto t = linspace(std::log(lo), std::log(hi), n);
  for (auto& x : t) x = std::exp(x);
  t.front() = lo;
  t.back() = hi;
  return t;
}

std::vector<double> geometric_radii(double r0, double q, std::size_t n) {
  if (!(r0 > 0.0) || !(q > 0.0) || n == 0)
    throw std::invalid_argument("geometric_radii needs r0 > 0, q > 0, n > 0");
  std::vector<double> out(n);
  double r = r0;
  for (std::size_t i = 0; i < n; ++i, r *= q) out[i] = r;
  return out;
}

namespace {

void validate_log_terms(const std::vector<double>& log_terms) {
  if (log_terms.size() < 3) throw std::domain_error("weight sequence horizon must be at least 2");
  if (log_terms[0] != 0.0) throw std::invalid_argument("log M_0 must be 0");
  for (double v : log_terms)
    if (!std::isfinite(v)) throw std::invalid_argument("weight sequence entries must be finite");
}

}  // namespace

WeightSequence::WeightSequence(FamilyParams params, std::vector<double> log_terms)
    : params_(params), log_terms_(std::move(log_terms)) {
  validate_log_terms(log_terms_);
}

WeightSequence WeightSequence::gevrey(double alpha, std::size_t horizon) {
  if (!(alpha > 0.0)) throw std::invalid_argument("gevrey index alpha must be positive");
  std::vector<double> lt(horizon + 1);
  for (std::size_t p = 0; p <= horizon; ++p)
    lt[p] = alpha * std::lgamma(static_cast<double>(p) + 1.0);
  lt[0] = 0.0;
  return WeightSequence({SequenceFamily::gevrey, alpha, 0.0, 0.0}, std::move(lt));
}

WeightSequence WeightSequence::alpha_beta(double alpha, double beta, std::size_t horizon) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  std::vector<double> lt(horizon + 1);
  double cum = 0.0;  // sum of log log(e+m), m = 0..p
  for (std::size_t p = 0; p <= horizon; ++p) {
    cum += std::log(std::log(std::numbers::e + static_cast<double>(p)));
    lt[p] = alpha * std::lgamma(static_cast<double>(p) + 1.0) + beta * cum;
  }
  lt[0] = 0.0;  // log log e = 0 exactly; keep the invariant free of rounding
  return WeightSequence({SequenceFamily::alpha_beta, alpha, beta, 0.0}, std::move(lt));
}

WeightSequence WeightSequence::zero_beta(double beta, std::size_t horizon) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  std::vector<double> lt(horizon + 1);
  double cum = 0.0;
  for (std::size_t p = 0; p <= horizon; ++p) {
    cum += std::log(std::log(std::numbers::e + static_cast<double>(p)));
    lt[p] = beta * cum;
  }
  lt[0] = 0.0;
  return WeightSequence({SequenceFamily::zero_beta, 0.0, beta, 0.0}, std::move(lt));
}

WeightSequence WeightSequence::q_square(double q, std::size_t horizon) {
  if (!(q > 1.0)) throw std::invalid_argument("q must exceed 1");
  const double lq = std::log(q);
  std::vector<double> lt(horizon + 1);
  for (std::size_t p = 0; p <= horizon; ++p)
    lt[p] = static_cast<double>(p) * static_cast<double>(p) * lq;
  return WeightSequence({SequenceFamily::q_square, 0.0, 0.0, q}, std::move(lt));
}

WeightSequence WeightSequence::custom(std::vector<double> log_terms) {
  return WeightSequence({SequenceFamily::custom, 0.0, 0.0, 0.0}, std::move(log_terms));
}

WeightSequence WeightSequence::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
  std::vector<double> lt;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // allow blank trailing lines
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(a, b - a + 1);
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      lt.push_back(v);
    } catch (const std::exception&) {
      std::ostringstream msg;
      msg << path << ":" << lineno << ": not a number: '" << tok << "'";
      throw std::invalid_argument(msg.str());
    }
  }
  if (!lt.empty() && lt[0] != 0.0)
    throw std::invalid_argument(path + ": first entry must be 0 (log M_0)");
  return custom(std::move(lt));
}

std::vector<double> log_quotients(const WeightSequence& w) {
  const auto lt = w.log_terms();
  std::vector<double> q(lt.size() - 1);
  for (std::size_t p = 0; p + 1 < lt.size(); ++p) q[p] = lt[p + 1] - lt[p];
  return q;
}

namespace {

// sup_{p < h} m_p^(1/(p+1))
double dc_estimate(const std::vector<double>& lq, std::size_t h) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < h; ++p)
    best = std::max(best, lq[p] / (static_cast<double>(p) + 1.0));
  return std::exp(best);
}

// sup_{p+q <= h} (M_{p+q} / (M_p M_q))^(1/(p+q)).
// For log-convex input the inner sup over a fixed p+q = s is attained at the
// even split, which collapses the scan to O(h).
double mg_estimate(std::span<const double> lt, std::size_t h, bool lc_holds) {
  double best = 0.0;  // s = 0 gives ratio 1
  if (lc_holds) {
    for (std::size_t s = 2; s <= h; ++s) {
      double v = (lt[s] - lt[s / 2] - lt[s - s / 2]) / static_cast<double>(s);
      best = std::max(best, v);
    }
  } else {
    for (std::size_t p = 1; p <= h; ++p)
      for (std::size_t q = p; p + q <= h; ++q) {
        double v = (lt[p + q] - lt[p] - lt[q]) / static_cast<double>(p + q);
        best = std::max(best, v);
      }
  }
  return std::exp(best);
}

double logaddexp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// sup_{p <= h/2} m_p * sum_{q=p}^{h-1} 1/((q+1) m_q), entirely in log scale:
// the summands underflow long before the prefactor stops growing.
double snq_estimate(const std::vector<double>& lq, std::size_t h) {
  std::vector<double> tail(h + 1);
  tail[h] = -std::numeric_limits<double>::infinity();
  for (std::size_t q = h; q-- > 0;) {
    double term = -std::log(static_cast<double>(q) + 1.0) - lq[q];
    tail[q] = logaddexp(term, tail[q + 1]);
  }
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p <= h / 2; ++p)
    best = std::max(best, lq[p] + tail[p]);
  return std::exp(best);
}

bool stabilized(double half, double full, double tol) {
  if (!std::isfinite(half) || !std::isfinite(full)) return false;
  return std::abs(full - half) <= tol * std::max(std::abs(full), 1e-300);
}

}  // namespace

ConditionReport condition_report(const WeightSequence& w, double trend_tol) {
  const std::size_t P = w.horizon();
  if (P < 8) throw std::domain_error("condition_report needs horizon >= 8");
  const auto lt = w.log_terms();
  const auto lq = log_quotients(w);

  ConditionReport rep;

  rep.lc.holds_up_to_horizon = true;
  for (std::size_t p = 0; p + 1 < lq.size(); ++p) {
    if (lq[p + 1] < lq[p]) {
      rep.lc.holds_up_to_horizon = false;
      rep.lc.first_violation = p + 1;
      break;
    }
  }

  rep.dc.estimate = dc_estimate(lq, P);
  rep.dc.bounded_trend = stabilized(dc_estimate(lq, P / 2), rep.dc.estimate, trend_tol);

  rep.mg.estimate = mg_estimate(lt, P, rep.lc.holds_up_to_horizon);
  rep.mg.bounded_trend =
      stabilized(mg_estimate(lt, P / 2, rep.lc.holds_up_to_horizon), rep.mg.estimate, trend_tol);

  rep.snq.estimate = snq_estimate(lq, P);
  rep.snq.bounded_trend = stabilized(snq_estimate(lq, P / 2), rep.snq.estimate, trend_tol);

  // Monotone growth probe: minima over 8 consecutive index blocks must climb.
  rep.quotients_to_infinity = true;
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < 8; ++k) {
    std::size_t a = P * k / 8, b = P * (k + 1) / 8;
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t p = a; p < b; ++p) m = std::min(m, lq[p]);
    if (!(m > prev)) {
      rep.quotients_to_infinity = false;
      break;
    }
    prev = m;
  }
  return rep;
}

EquivalenceEstimate equivalence_estimate(const WeightSequence& w, const WeightSequence& l,
                                         double trend_tol) {
  if (w.horizon() != l.horizon())
    throw std::domain_error("equivalence_estimate needs matching horizons");
  const auto a = w.log_terms();
  const auto b = l.log_terms();
  const std::size_t P = w.horizon();

  auto scan = [&](std::size_t h, double& lo, double& hi) {
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    for (std::size_t p = 1; p <= h; ++p) {
      double d = (a[p] - b[p]) / static_cast<double>(p);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  };
  double lo_half, hi_half, lo_full, hi_full;
  scan(P / 2, lo_half, hi_half);
  scan(P, lo_full, hi_full);

  EquivalenceEstimate est;
  est.lower = std::exp(lo_full);
  est.upper = std::exp(hi_full);
  // Stability measured on the log scale, i.e. as relative change of the ratios.
  est.equivalent_trend = std::isfinite(lo_full) && std::isfinite(hi_full) &&
                         std::abs(lo_full - lo_half) <= trend_tol &&
                         std::abs(hi_full - hi_half) <= trend_tol;
  return est;
}

}  // namespace asymp
