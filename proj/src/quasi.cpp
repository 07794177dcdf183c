#include "asymp/quasi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "asymp/indices.hpp"

namespace asymp {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// geometric sample of [max(2, h/4), h-1], at most 65 distinct indices
std::vector<std::size_t> sample_indices(std::size_t h) {
  const std::size_t lo = std::max<std::size_t>(2, h / 4);
  const std::size_t hi = h - 1;
  std::vector<std::size_t> idx;
  for (int k = 0; k <= 64; ++k) {
    double x = static_cast<double>(lo) *
               std::pow(static_cast<double>(hi) / static_cast<double>(lo), k / 64.0);
    auto p = static_cast<std::size_t>(std::floor(x + 0.5));
    if (idx.empty() || p > idx.back()) idx.push_back(p);
  }
  return idx;
}

double ls_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

struct OmegaEstimate {
  double value = 0.0;
  double drift = 0.0;  // |estimate(P) - estimate(P/2)|
  bool stable = false;
};

OmegaEstimate stable_omega(const WeightSequence& w) {
  const std::size_t window = std::max<std::size_t>(10, w.horizon() / 10);
  TailEstimate est = omega(w, window);
  OmegaEstimate out;
  out.value = est.estimate;
  const std::size_t n = est.series.size();
  if (n >= 2) {
    out.drift = std::abs(est.series[n - 1].value - est.series[n - 2].value);
    out.stable = std::isfinite(out.drift) &&
                 out.drift <= 1e-2 * std::max(1.0, std::abs(out.value));
  }
  return out;
}

}  // namespace

SeriesVerdict series_classify(const std::function<double(std::size_t)>& term,
                              std::size_t horizon, double tol) {
  if (horizon < 64) throw std::domain_error("series horizon must be at least 64");

  SeriesVerdict out;
  double total = 0.0;
  std::size_t next_dyadic = 1;
  for (std::size_t p = 0; p < horizon; ++p) {
    double t = term(p);
    if (!(t > 0.0) || !std::isfinite(t))
      throw std::domain_error("series terms must be positive and finite");
    total += t;
    if (p + 1 == next_dyadic) {
      out.partial_sums.push_back({p + 1, total});
      next_dyadic *= 2;
    }
  }
  if (out.partial_sums.back().horizon != horizon)
    out.partial_sums.push_back({horizon, total});

  const auto idx = sample_indices(horizon);
  std::vector<double> xs, us, ys;
  xs.reserve(idx.size());
  us.reserve(idx.size());
  ys.reserve(idx.size());
  for (std::size_t p : idx) {
    xs.push_back(std::log(static_cast<double>(p)));
    us.push_back(std::log(std::log(static_cast<double>(p))));
    ys.push_back(-std::log(term(p)));
  }

  out.s_exponent = ls_slope(xs, ys);
  if (out.s_exponent > 1.0 + tol) {
    out.verdict = SeriesOutcome::converges;
    return out;
  }
  if (out.s_exponent < 1.0 - tol) {
    out.verdict = SeriesOutcome::diverges;
    return out;
  }

  std::vector<double> vs(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) vs[i] = ys[i] - xs[i];
  out.bertrand_exponent = ls_slope(us, vs);
  if (*out.bertrand_exponent > 1.0 + tol) {
    out.verdict = SeriesOutcome::converges;
    return out;
  }
  if (*out.bertrand_exponent < 1.0 - tol) {
    out.verdict = SeriesOutcome::diverges;
    return out;
  }

  // double borderline: divergent only if the terms really behave like
  // 1/(p log p) -- a drifting residual means a slower correction we cannot
  // rank against the convergence boundary
  double rmin = ys[0] - xs[0] - us[0];
  double rmax = rmin;
  for (std::size_t i = 1; i < ys.size(); ++i) {
    double r = ys[i] - xs[i] - us[i];
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  out.verdict = (rmax - rmin <= 0.1) ? SeriesOutcome::diverges
                                     : SeriesOutcome::inconclusive;
  return out;
}

namespace {

QuasiVerdict from_series(SeriesVerdict sv, const std::string& what) {
  QuasiVerdict out;
  switch (sv.verdict) {
    case SeriesOutcome::diverges:
      out.quasianalytic = Ternary::yes;
      out.reason = what + " diverges (s_exponent " + num(sv.s_exponent) +
                   (sv.bertrand_exponent
                        ? ", bertrand " + num(*sv.bertrand_exponent)
                        : std::string()) +
                   ")";
      break;
    case SeriesOutcome::converges:
      out.quasianalytic = Ternary::no;
      out.reason = what + " converges (s_exponent " + num(sv.s_exponent) +
                   (sv.bertrand_exponent
                        ? ", bertrand " + num(*sv.bertrand_exponent)
                        : std::string()) +
                   ")";
      break;
    case SeriesOutcome::inconclusive:
      out.quasianalytic = Ternary::inconclusive;
      out.reason = what + " could not be classified";
      break;
  }
  out.series = std::move(sv);
  return out;
}

void require_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be positive and finite");
}

}  // namespace

QuasiVerdict classify_salinas(const WeightSequence& w, double gamma,
                              double omega_tol) {
  require_gamma(gamma);
  OmegaEstimate om = stable_omega(w);
  if (!om.stable) {
    return {Ternary::inconclusive,
            "omega estimate unstable (moved " + num(om.drift) +
                " between half and full horizon)",
            std::nullopt};
  }
  if (gamma > om.value + omega_tol) {
    return {Ternary::yes,
            "gamma " + num(gamma) + " > omega " + num(om.value), std::nullopt};
  }
  if (gamma < om.value - omega_tol) {
    return {Ternary::no,
            "gamma " + num(gamma) + " < omega " + num(om.value), std::nullopt};
  }
  auto lq = log_quotients(w);
  const double expo = 1.0 / (om.value + 1.0);
  auto sv = series_classify(
      [&lq, expo](std::size_t p) {
        return std::exp(-expo * (std::log(static_cast<double>(p) + 1.0) + lq[p]));
      },
      lq.size());
  QuasiVerdict out = from_series(
      std::move(sv), "gamma matches omega " + num(om.value) +
                         "; boundary series sum ((p+1) m_p)^(-1/(omega+1))");
  return out;
}

QuasiVerdict classify_watson_uniform(const WeightSequence& w, double gamma,
                                     double omega_tol) {
  require_gamma(gamma);
  auto lq = log_quotients(w);
  auto sv = series_classify(
      [&lq, gamma](std::size_t p) { return std::exp(-lq[p] / gamma); },
      lq.size());
  if (sv.verdict != SeriesOutcome::inconclusive)
    return from_series(std::move(sv), "criterion series sum (1/m_p)^(1/gamma)");

  // the series engine gave up; fall back to the index split away from the band
  OmegaEstimate om = stable_omega(w);
  if (om.stable && gamma > om.value + omega_tol) {
    return {Ternary::yes,
            "series test inconclusive; gamma " + num(gamma) + " > omega " +
                num(om.value),
            std::move(sv)};
  }
  if (om.stable && gamma < om.value - omega_tol) {
    return {Ternary::no,
            "series test inconclusive; gamma " + num(gamma) + " < omega " +
                num(om.value),
            std::move(sv)};
  }
  return {Ternary::inconclusive,
          "series test inconclusive and omega split unavailable",
          std::move(sv)};
}

QuasiVerdict classify_watson_regions(const WeightSequence& w, double gamma,
                                     bool proximate_order_established) {
  require_gamma(gamma);
  if (!proximate_order_established) {
    return {Ternary::inconclusive,
            "criterion needs a sequence admitting a nonzero proximate order; "
            "run regvar_test or assert it explicitly",
            std::nullopt};
  }
  OmegaEstimate om = stable_omega(w);
  if (!om.stable) {
    return {Ternary::inconclusive,
            "omega estimate unstable (moved " + num(om.drift) +
                " between half and full horizon)",
            std::nullopt};
  }
  std::string note = gamma <= 1.0
                         ? "; bounded sectors use the same test (stated range "
                           "gamma <= 1)"
                         : "";
  if (gamma > om.value) {
    return {Ternary::yes,
            "gamma " + num(gamma) + " > omega " + num(om.value) + note,
            std::nullopt};
  }
  return {Ternary::no,
          "gamma " + num(gamma) + " <= omega " + num(om.value) +
              ": a nontrivial flat function exists" + note,
          std::nullopt};
}

}  // namespace asymp
