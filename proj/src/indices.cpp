#include "asymp/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace asymp {

namespace {

// min of log m_p / log p over quotient indices [h-window, h), skipping p < 2.
double tail_min(const std::vector<double>& lq, std::size_t h, std::size_t window) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t p = (h > window ? h - window : 2); p < h; ++p) {
    if (p < 2) continue;
    best = std::min(best, lq[p] / std::log(static_cast<double>(p)));
  }
  return best;
}

void require_window(std::size_t horizon, std::size_t window) {
  if (window < 10) throw std::domain_error("window must be at least 10");
  if (horizon < 10 * window) throw std::domain_error("horizon must be at least 10*window");
}

}  // namespace

TailEstimate omega(const WeightSequence& w, std::size_t window) {
  require_window(w.horizon(), window);
  const auto lq = log_quotients(w);
  const std::size_t P = lq.size();

  TailEstimate out;
  out.estimate = tail_min(lq, P, window);
  for (std::size_t h : {P / 8, P / 4, P / 2, P})
    out.series.push_back({h, tail_min(lq, h, std::min(window, h / 2))});
  return out;
}

double exponent_of_convergence(std::span<const double> log_c, std::size_t window) {
  const std::size_t N = log_c.size();
  require_window(N, window);
  // the limsup of log n / log c_n only makes sense if c_n keeps climbing
  for (std::size_t n = N / 2; n + 1 < N; ++n)
    if (log_c[n + 1] < log_c[n]) throw std::domain_error("tail of c is not nondecreasing");
  if (!(log_c[N - 1] > log_c[N / 2]))
    throw std::domain_error("tail of c does not grow within the horizon");

  double best = 0.0;
  for (std::size_t n = N - window; n < N; ++n) {
    if (n < 2 || !(log_c[n] > 0.0)) continue;
    best = std::max(best, std::log(static_cast<double>(n)) / log_c[n]);
  }
  return best;
}

BLimit b_limit(const WeightSequence& w, std::size_t window) {
  require_window(w.horizon(), window);
  const auto lt = w.log_terms();
  const auto lq = log_quotients(w);
  const std::size_t P = lq.size();

  auto value = [&](std::size_t p) { return lq[p] - lt[p] / static_cast<double>(p); };
  BLimit out;
  out.estimate = value(P - 1);
  double drift = std::abs(out.estimate - value(P - window));
  out.converged = drift <= 1e-2 * std::max(1.0, std::abs(out.estimate));
  return out;
}

std::vector<RegvarRow> regvar_test(const WeightSequence& w,
                                   std::span<const std::size_t> multipliers,
                                   std::span<const std::size_t> probes, double tol) {
  const auto lq = log_quotients(w);
  const std::size_t P = lq.size();
  const double om = omega(w, std::max<std::size_t>(10, P / 10)).estimate;

  std::vector<RegvarRow> rows;
  for (std::size_t ell : multipliers) {
    if (ell < 1) throw std::domain_error("multiplier must be at least 1");
    for (std::size_t p : probes) {
      if (p < 1 || ell * p >= P) throw std::domain_error("probe index out of range");
      RegvarRow row;
      row.ell = ell;
      row.p = p;
      double log_ratio = lq[ell * p] - lq[p];
      double log_target = om * std::log(static_cast<double>(ell));
      row.ratio = std::exp(log_ratio);
      row.target = std::exp(log_target);
      row.diverged = std::abs(log_ratio - log_target) > std::log(1e6);
      row.pass = !row.diverged && std::abs(row.ratio / row.target - 1.0) < tol;
      rows.push_back(row);
    }
  }
  return rows;
}

IndexReport index_report(const WeightSequence& w, std::size_t window) {
  const std::size_t P = w.horizon();
  if (window == 0) window = std::max<std::size_t>(10, P / 10);

  IndexReport rep;
  auto om = omega(w, window);
  rep.omega_estimate = om.estimate;
  rep.omega_window_series = std::move(om.series);

  const auto lq = log_quotients(w);
  rep.lambda_m = exponent_of_convergence(lq, window);
  std::vector<double> lpm(lq.size());
  for (std::size_t p = 0; p < lq.size(); ++p)
    lpm[p] = std::log(static_cast<double>(p) + 1.0) + lq[p];
  rep.lambda_pm = exponent_of_convergence(lpm, window);

  auto bl = b_limit(w, window);
  rep.b_limit_estimate = bl.estimate;
  rep.b_limit_converged = bl.converged;

  const std::size_t kMult[] = {2, 3, 4};
  std::vector<std::size_t> probes;
  for (std::size_t p : {P / 100, P / 10, P / 5})
    if (p >= 1 && 4 * p < P) probes.push_back(p);
  if (!probes.empty()) rep.regvar_table = regvar_test(w, kMult, probes);
  return rep;
}

}  // namespace asymp
