#include "asymp/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "asymp/grids.hpp"

namespace asymp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMargin = 1.0;          // anchored sup allowance of both fits
constexpr double kBracketLo = 1e-3;
constexpr double kBracketHi = 1e3;
constexpr double kLadderCap = 1e9;
// the contract promises relative resolution 1e-3; we bisect finer so that the
// flat/expansion agreement (whose anchors differ by an O(1) constant divided
// by a ~1e3 slope) keeps headroom under that figure
constexpr double kResolution = 1e-4;
constexpr double kBoundedLogCap = 230.0;  // |f| <= e^230 counts as sector-bounded
// above this, e^{V} (and the phase of sin(e^V)) stops being representable
constexpr double kExpArgCap = 690.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::complex<double> from_log(const LogComplex& lc) {
  if (lc.log_modulus < -700.0) return {0.0, 0.0};
  return std::polar(std::exp(lc.log_modulus), lc.argument);
}

// smallest value in [lo, hi-ladder] where pred flips to true; pred must be
// monotone (false below, true above); nullopt when the ladder cap runs out
std::optional<double> smallest_feasible(const std::function<bool(double)>& pred) {
  double hi = kBracketHi;
  while (!pred(hi)) {
    hi *= 2.0;
    if (hi > kLadderCap) return std::nullopt;
  }
  double lo = kBracketLo;
  if (pred(lo)) return lo;
  while (std::log(hi / lo) > kResolution) {
    double mid = std::sqrt(lo * hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// run body(0..n-1) on worker threads; slots make the merge deterministic
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::vector<std::future<void>> jobs;
  jobs.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    jobs.push_back(std::async(std::launch::async, body, i));
  for (auto& j : jobs) j.get();
}

void require_radii(std::span<const double> radii, const char* who) {
  if (radii.size() < 16)
    throw std::domain_error(std::string(who) + " needs at least 16 radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i]))
      throw std::domain_error(std::string(who) + " radii must be positive and finite");
    if (i > 0 && !(radii[i] < radii[i - 1]))
      throw std::domain_error(std::string(who) + " radii must be strictly decreasing");
  }
}

}  // namespace

TestFunction::TestFunction(std::string name, std::function<LogComplex(double, double)> eval)
    : name_(std::move(name)), eval_(std::move(eval)) {}

TestFunction TestFunction::exp_flat(const MaergoizFunction& v) {
  return TestFunction("exp_flat", [v](double r, double theta) {
    auto lc = v.log_value(1.0 / r, -theta);
    auto w = from_log(lc);
    return LogComplex{-w.real(), -w.imag()};
  });
}

TestFunction TestFunction::wasow(const MaergoizFunction& v) {
  return TestFunction("wasow", [v](double r, double theta) {
    auto lc = v.log_value(1.0 / r, -theta);
    auto w = from_log(lc);
    if (w.real() > kExpArgCap) {
      // e^{V} is not representable; |sin| <= 1 makes -Re V the honest
      // magnitude envelope, and the phase is sub-ulp garbage anyway
      return LogComplex{-w.real(), -w.imag()};
    }
    std::complex<double> big = std::polar(std::exp(w.real()), w.imag());
    if (std::abs(big.imag()) > kExpArgCap) {
      // sinh overflows; log|sin(u+iv)| ~ |v| - log 2, phase unreliable
      return LogComplex{std::abs(big.imag()) - std::numbers::ln2 - w.real(), 0.0};
    }
    auto s = std::sin(big);
    double lm = std::abs(s) == 0.0 ? -kInf : std::log(std::abs(s));
    return LogComplex{lm - w.real(), std::arg(s) - w.imag()};
  });
}

TestFunction TestFunction::corrected(const TestFunction& base, const MaergoizFunction& v,
                                     std::complex<double> a) {
  if (!(std::abs(a) > 0.0) || !std::isfinite(std::abs(a)))
    throw std::invalid_argument("corrected function needs a nonzero finite a");
  const double am = std::abs(a), aa = std::arg(a);
  auto inner = base;  // copy; the closure must own its pieces
  return TestFunction("corrected(" + base.name() + ")",
                      [inner, v, am, aa](double r, double theta) {
                        auto lc0 = inner.log_value(r, theta);
                        auto w = from_log(v.log_value(am / r, aa - theta));
                        return LogComplex{lc0.log_modulus + w.real(),
                                          lc0.argument + w.imag()};
                      });
}

TestFunction TestFunction::user(std::string name,
                                std::function<LogComplex(double, double)> eval) {
  if (!eval) throw std::invalid_argument("user function needs an evaluator");
  return TestFunction(std::move(name), std::move(eval));
}

LogComplex TestFunction::log_value(double r, double theta) const {
  if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(theta))
    throw std::domain_error("test function needs finite r > 0 and theta");
  return eval_(r, theta);
}

std::complex<double> TestFunction::value(double r, double theta) const {
  return from_log(log_value(r, theta));
}

RayTrace trace_ray(const TestFunction& f, double theta, std::span<const double> radii) {
  require_radii(radii, "trace_ray");
  RayTrace t;
  t.theta = theta;
  t.radii.assign(radii.begin(), radii.end());
  t.log_abs.resize(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i)
    t.log_abs[i] = f.log_value(radii[i], theta).log_modulus;
  return t;
}

FlatnessFit fit_flat_type(const RayTrace& trace, const AssociatedFunction& a) {
  require_radii(trace.radii, "fit_flat_type");
  if (trace.log_abs.size() != trace.radii.size())
    throw std::domain_error("fit_flat_type needs one log|f| per radius");

  const auto& rs = trace.radii;
  const auto& la = trace.log_abs;
  auto sup = [&](double c2) {
    const double lc2 = std::log(c2);
    double worst = -kInf;
    for (std::size_t i = 0; i < rs.size(); ++i)
      worst = std::max(worst, la[i] + a.value_log(-lc2 - std::log(rs[i])));
    return worst;
  };
  auto feasible = [&](double c2) {
    try {
      double anchor = la[0] + a.value_log(-std::log(c2) - std::log(rs[0]));
      return sup(c2) <= anchor + kMargin;
    } catch (const std::out_of_range&) {
      return false;  // flatness term ran past the horizon: c2 too small
    }
  };

  FlatnessFit fit;
  fit.theta = trace.theta;
  auto c2 = smallest_feasible(feasible);
  if (!c2) {
    fit.diagnostic = "not flat: no c2 up to " + num(kLadderCap) +
                     " keeps the anchored sup within margin";
    return fit;
  }
  const double s = sup(*c2);
  const double decay_term = a.value_log(-std::log(*c2) - std::log(rs.back()));
  const double data_decay = la.front() - la.back();
  if (decay_term <= 1.5 * kMargin || data_decay < 2.0 * kMargin) {
    fit.diagnostic = "not flat: bound certifies no decay (M term " + num(decay_term) +
                     " at the finest scale, data decay " + num(data_decay) + ")";
    return fit;
  }
  fit.flat = true;
  fit.c2 = *c2;
  fit.c1 = std::exp(s);
  double tightest = kInf;
  for (std::size_t i = 0; i < rs.size(); ++i)
    tightest = std::min(tightest, la[i] + a.value_log(-std::log(*c2) - std::log(rs[i])));
  fit.residual = s - tightest;
  return fit;
}

PropagationTable propagation_experiment(const TestFunction& f, const AssociatedFunction& a,
                                        double gamma, double flat_direction,
                                        std::span<const double> delta_grid, const MvBand& mv,
                                        double r0) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (!(mv.a_est > 0.0) || !(mv.b_est > 0.0) || !(mv.omega > 0.0))
    throw std::invalid_argument("mv band needs positive A, B, omega");
  if (delta_grid.empty()) throw std::invalid_argument("delta grid must be nonempty");
  const double half = std::numbers::pi * gamma / 2.0;
  if (!(std::abs(flat_direction) <= half + 1e-12))
    throw std::invalid_argument("flat direction outside the sector");
  for (double d : delta_grid) {
    if (!(d > 0.0) || !(d <= std::numbers::pi * gamma + 1e-12))
      throw std::invalid_argument("delta must lie in (0, pi*gamma]");
    if (!(d / (2.0 * mv.omega) < std::numbers::pi / 2.0))
      throw std::invalid_argument("delta/(2 omega) must stay below pi/2");
  }

  PropagationTable table;
  auto radii = geometric_radii(r0, 0.9, 64);

  // boundedness precheck over a coarse fan
  for (int k = 0; k < 9; ++k) {
    double th = -half + 2.0 * half * k / 8.0;
    for (std::size_t i = 0; i < radii.size(); i += 2) {
      if (f.log_value(radii[i], th).log_modulus > kBoundedLogCap) {
        table.aborted = true;
        table.diagnostic = "aborted: " + f.name() + " exceeds e^" + num(kBoundedLogCap) +
                           " near theta=" + num(th) + "; not bounded on the sector";
        return table;
      }
    }
  }

  table.flat_fit = fit_flat_type(trace_ray(f, flat_direction, radii), a);
  if (!table.flat_fit.flat) {
    table.aborted = true;
    table.diagnostic = "aborted: not flat in the flat direction (" +
                       table.flat_fit.diagnostic + ")";
    return table;
  }

  const double c2 = table.flat_fit.c2;
  table.rows.resize(delta_grid.size());
  parallel_for(delta_grid.size(), [&](std::size_t j) {
    const double d = delta_grid[j];
    auto fit = fit_flat_type(trace_ray(f, -half + d, radii), a);
    PropagationRow row;
    row.delta = d;
    row.k2_fitted = fit.flat ? fit.c2 : kInf;
    row.k2_predicted_bound = std::pow(2.0 * mv.b_est / mv.a_est, mv.omega) *
                             std::pow(1.0 / std::sin(d / (2.0 * mv.omega)), mv.omega) * c2;
    row.satisfied = row.k2_fitted <= row.k2_predicted_bound;
    table.rows[j] = row;
  });
  table.all_satisfied = std::all_of(table.rows.begin(), table.rows.end(),
                                    [](const PropagationRow& r) { return r.satisfied; });
  return table;
}

TwoDirectionResult two_direction_experiment(const TestFunction& f, const AssociatedFunction& a,
                                            double gamma, double r0, std::size_t fan_size) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
  if (fan_size < 3) throw std::invalid_argument("fan needs at least 3 directions");
  const double half = std::numbers::pi * gamma / 2.0;
  auto radii = geometric_radii(r0, 0.9, 64);

  TwoDirectionResult res;
  res.fits.resize(fan_size);
  parallel_for(fan_size, [&](std::size_t k) {
    double th = -half + 2.0 * half * static_cast<double>(k) / static_cast<double>(fan_size - 1);
    res.fits[k] = fit_flat_type(trace_ray(f, th, radii), a);
  });

  res.uniform = true;
  for (const auto& fit : res.fits) {
    if (!fit.flat) {
      if (res.uniform) res.failing_direction = fit.theta;
      res.uniform = false;
      continue;
    }
    res.k1 = std::max(res.k1, fit.c1);
    res.k2 = std::max(res.k2, fit.c2);
  }
  return res;
}

PlCheckResult pl_numeric_check(const TestFunction& f, const SectorSpec& sector,
                               std::size_t boundary_n, std::size_t interior_n) {
  if (!(sector.gamma > 0.0)) throw std::invalid_argument("sector needs gamma > 0");
  if (!sector.r || !(*sector.r > 0.0))
    throw std::invalid_argument("pl check needs a bounded sector (finite r)");
  if (boundary_n < 16 || interior_n < 16)
    throw std::invalid_argument("pl check needs at least 16 samples per grid");

  const double R = *sector.r;
  const double lo = sector.d - std::numbers::pi * sector.gamma / 2.0;
  const double hi = sector.d + std::numbers::pi * sector.gamma / 2.0;
  PlCheckResult out;
  out.max_boundary_log = -kInf;
  out.max_interior_log = -kInf;

  // boundary: the arc gets half the budget, each radial side a quarter;
  // sides sample three decades down from the arc (grids cannot reach 0)
  const std::size_t n_arc = boundary_n / 2;
  const std::size_t n_side = boundary_n / 4;
  for (std::size_t i = 0; i < n_arc; ++i) {
    double th = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_arc - 1);
    out.max_boundary_log = std::max(out.max_boundary_log, f.log_value(R, th).log_modulus);
  }
  for (double th : {lo, hi}) {
    for (std::size_t j = 0; j < n_side; ++j) {
      double rho = std::exp(std::log(R * 1e-3) +
                            (std::log(R) - std::log(R * 1e-3)) * static_cast<double>(j) /
                                static_cast<double>(n_side - 1));
      out.max_boundary_log = std::max(out.max_boundary_log, f.log_value(rho, th).log_modulus);
    }
  }

  // interior: half-step offsets keep every sample strictly inside
  const std::size_t n_th = std::max<std::size_t>(
      3, static_cast<std::size_t>(std::sqrt(static_cast<double>(interior_n))));
  const std::size_t n_rho = std::max<std::size_t>(3, interior_n / n_th);
  for (std::size_t i = 0; i < n_th; ++i) {
    double th = lo + (static_cast<double>(i) + 0.5) * (hi - lo) / static_cast<double>(n_th);
    for (std::size_t j = 0; j < n_rho; ++j) {
      double rho = R * std::pow(10.0, -3.0 * (static_cast<double>(j) + 0.5) /
                                          static_cast<double>(n_rho));
      out.max_interior_log = std::max(out.max_interior_log, f.log_value(rho, th).log_modulus);
    }
  }
  out.satisfied = out.max_interior_log <= out.max_boundary_log + std::log1p(1e-6);
  return out;
}

ProofRecipe proof_recipe_a(double a_est, double c2, double omega, double gamma, double delta) {
  if (!(a_est > 0.0) || !(c2 > 0.0) || !(omega > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("recipe needs positive A, c2, omega, gamma");
  if (!(delta > 0.0) || !(delta <= std::numbers::pi * gamma + 1e-12))
    throw std::invalid_argument("recipe needs delta in (0, pi*gamma]");
  ProofRecipe rec;
  rec.d2 = 0.9 * std::pow(c2, -1.0 / omega);        // strict d2 < c2^{-1/omega}
  rec.modulus = 0.5 * std::pow(a_est * rec.d2 / 2.0, omega);  // strict |a| < (A d2/2)^omega
  rec.argument = omega * std::numbers::pi / 2.0 - std::numbers::pi * gamma / 2.0 + delta / 2.0;
  rec.a = std::polar(rec.modulus, rec.argument);
  return rec;
}

WasowDemo wasow_demo(const MaergoizFunction& v, const AssociatedFunction& a,
                     std::span<const double> radii) {
  if (v.family() != VFamily::power)
    throw std::invalid_argument("wasow demo needs the pure power family");
  require_radii(radii, "wasow_demo");
  const double rho_v = v.rho();
  const double scale = std::exp(v.log_scale());
  auto v_at = [&](double r) { return v.value_real(1.0 / r); };
  auto vprime = [&](double r) { return rho_v * scale * std::pow(1.0 / r, rho_v - 1.0); };
  if (v_at(radii.back()) > kExpArgCap)
    throw std::domain_error("wasow derivative needs e^{V} representable; raise the smallest radius");

  WasowDemo demo;
  demo.flat_fit_on_axis = fit_flat_type(trace_ray(TestFunction::wasow(v), 0.0, radii), a);

  bool qual_pos = false, qual_neg = false;
  demo.derivative_samples.reserve(radii.size());
  for (double r : radii) {
    const double V = v_at(r);
    const double E = std::exp(V);
    const double fp = vprime(r) * (std::sin(E) * std::exp(-V) - std::cos(E)) / (r * r);
    demo.derivative_samples.emplace_back(r, fp);
    // an extremum counts only when it clears the flat part's envelope by 10x
    const double envelope = vprime(r) * std::exp(-V) / (r * r);
    if (std::abs(fp) >= std::max(1.0, 10.0 * envelope)) {
      if (fp > 0.0) qual_pos = true;
      if (fp < 0.0) qual_neg = true;
    }
  }
  demo.oscillation_detected = qual_pos && qual_neg;

  // subsequences in closed form: r solves e^{V(1/r)} = pi n + pi/2 (resp. pi n),
  // geometric in n because r creeps only logarithmically
  const double pi = std::numbers::pi;
  double n = std::ceil((std::exp(v_at(radii.front())) - pi / 2.0) / pi);
  for (int k = 0; k < 16 && n < 4.5e15; ++k, n *= 4.0) {
    const double sign = std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0;
    double L = std::log(pi * n + pi / 2.0);            // V(1/r) at the cos zero
    double r = std::pow(scale / L, 1.0 / rho_v);
    demo.cos_zero_samples.emplace_back(r, sign * vprime(r) / ((pi * n + pi / 2.0) * r * r));
    L = std::log(pi * n);                              // V(1/r) at the sin zero
    r = std::pow(scale / L, 1.0 / rho_v);
    demo.sin_zero_samples.emplace_back(r, -sign * vprime(r) / (r * r));
  }
  return demo;
}

ExpansionFit expansion_fit(const TestFunction& f, std::span<const double> coeffs,
                           const WeightSequence& w, double theta,
                           std::span<const double> radii) {
  require_radii(radii, "expansion_fit");
  const std::size_t p_max = coeffs.size();
  if (p_max > w.horizon())
    throw std::invalid_argument("more coefficients than the sequence horizon");
  for (double c : coeffs)
    if (!std::isfinite(c)) throw std::invalid_argument("coefficients must be finite");
  const auto lt = w.log_terms();
  const std::size_t n = radii.size();

  ExpansionFit fit;
  fit.theta = theta;
  fit.p_max = p_max;

  std::vector<double> fla(n);
  std::vector<std::complex<double>> fval(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto lc = f.log_value(radii[i], theta);
    fla[i] = lc.log_modulus;
    fval[i] = from_log(lc);
  }

  if (p_max == 0) {
    // empty sum: |f| <= C with no order information; A is a placeholder
    double s = *std::max_element(fla.begin(), fla.end());
    fit.A = 1.0;
    fit.C = std::exp(s);
    fit.per_p_slack = {0.0};
    fit.fitted = true;
    return fit;
  }

  // rem_log[p*n + i] = log|f(z_i) - sum_{m<p} a_m z_i^m|; remainders stay in
  // log form while every coefficient so far is zero (the linear round trip
  // would underflow exactly where flat functions are interesting)
  std::vector<double> rem_log((p_max + 1) * n);
  std::vector<char> dropped((p_max + 1) * n, 0);
  std::size_t kept_high_order = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> z = std::polar(radii[i], theta);
    std::complex<double> partial = 0.0, comp = 0.0, zn = 1.0;
    double scale = std::abs(fval[i]);
    bool sum_is_zero = true;
    for (std::size_t p = 0; p <= p_max; ++p) {
      if (sum_is_zero) {
        rem_log[p * n + i] = fla[i];
        if (p > 0) ++kept_high_order;
      } else {
        const std::complex<double> rem = fval[i] - (partial + comp);
        if (std::abs(rem) <= scale * std::numeric_limits<double>::epsilon() * 1e6) {
          dropped[p * n + i] = 1;
          ++fit.dropped_samples;
          if (fit.warnings.size() < 8)
            fit.warnings.push_back("dropped p=" + num(static_cast<double>(p)) + " r=" +
                                   num(radii[i]) + ": remainder below the cancellation floor");
        } else {
          rem_log[p * n + i] = std::log(std::abs(rem));
          ++kept_high_order;
        }
      }
      if (p < p_max) {
        const std::complex<double> term = coeffs[p] * zn;
        const std::complex<double> t = partial + term;  // Neumaier-compensated add
        if (std::abs(partial) >= std::abs(term))
          comp += (partial - t) + term;
        else
          comp += (term - t) + partial;
        partial = t;
        scale += std::abs(coeffs[p]) * std::abs(zn);
        zn *= z;
        if (coeffs[p] != 0.0) sum_is_zero = false;
      }
    }
  }
  if (fit.dropped_samples > 0 && fit.warnings.size() == 8)
    fit.warnings.push_back("... " + num(static_cast<double>(fit.dropped_samples)) +
                           " dropped samples in total");
  if (kept_high_order == 0)
    throw std::domain_error("every remainder sample fell below the cancellation floor");

  std::vector<double> lr(n);
  for (std::size_t i = 0; i < n; ++i) lr[i] = std::log(radii[i]);
  auto sup = [&](double A) {
    const double lA = std::log(A);
    double worst = -kInf;
    for (std::size_t p = 0; p <= p_max; ++p) {
      const double dp = static_cast<double>(p);
      for (std::size_t i = 0; i < n; ++i) {
        if (dropped[p * n + i]) continue;
        worst = std::max(worst, rem_log[p * n + i] - dp * (lA + lr[i]) - lt[p]);
      }
    }
    return worst;
  };
  const double anchor = rem_log[0];  // p = 0 at the largest radius
  auto feasible = [&](double A) { return sup(A) <= anchor + kMargin; };

  auto A = smallest_feasible(feasible);
  if (!A) {
    fit.diagnostic = "no A up to " + num(kLadderCap) + " keeps the anchored sup within margin";
    return fit;
  }
  const double s = sup(*A);
  fit.A = *A;
  fit.C = std::exp(s);
  fit.fitted = true;
  fit.per_p_slack.resize(p_max + 1);
  const double lA = std::log(*A);
  for (std::size_t p = 0; p <= p_max; ++p) {
    const double dp = static_cast<double>(p);
    double worst = -kInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (dropped[p * n + i]) continue;
      worst = std::max(worst, rem_log[p * n + i] - dp * (lA + lr[i]) - lt[p]);
    }
    fit.per_p_slack[p] = s - worst;  // +inf when every sample at this order dropped
  }
  return fit;
}

ExtensionResult extension_experiment(const TestFunction& f, std::span<const double> coeffs,
                                     const WeightSequence& w, const SectorSpec& g,
                                     double theta0, std::span<const double> fan, double r0) {
  if (!(g.gamma > 0.0)) throw std::invalid_argument("sector needs gamma > 0");
  if (fan.empty()) throw std::invalid_argument("direction fan must be nonempty");
  const double half = std::numbers::pi * g.gamma / 2.0;
  auto inside = [&](double th) { return std::abs(th - g.d) <= half + 1e-12; };
  if (!inside(theta0)) throw std::domain_error("theta0 outside the sector");
  for (double th : fan)
    if (!inside(th)) throw std::domain_error("fan direction outside the sector");

  ExtensionResult res;
  const double start = g.r ? std::min(r0, *g.r) : r0;
  auto radii = geometric_radii(start, 0.9, 64);

  // every proper subsector must stay bounded; the fan and theta0 witness it
  std::vector<double> dirs(fan.begin(), fan.end());
  dirs.push_back(theta0);
  for (double th : dirs) {
    for (double r : radii) {
      if (f.log_value(r, th).log_modulus > kBoundedLogCap) {
        res.diagnostic = "aborted: " + f.name() + " exceeds e^" + num(kBoundedLogCap) +
                         " near theta=" + num(th) + "; unbounded on a subsector";
        return res;
      }
    }
  }

  auto base = expansion_fit(f, coeffs, w, theta0, radii);
  if (!base.fitted) {
    res.diagnostic = "aborted: no expansion fit at theta0=" + num(theta0) + " (" +
                     base.diagnostic + ")";
    return res;
  }

  res.rows.resize(fan.size());
  parallel_for(fan.size(), [&](std::size_t k) {
    res.rows[k] = expansion_fit(f, coeffs, w, fan[k], radii);
  });
  res.success = std::all_of(res.rows.begin(), res.rows.end(),
                            [](const ExpansionFit& e) { return e.fitted; });
  if (!res.success) res.diagnostic = "one or more fan directions failed to fit";
  return res;
}

}  // namespace asymp
