#include "asymp/maergoiz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace asymp {

namespace {

void require_grid(std::span<const double> grid, std::size_t min_points,
                  const char* what) {
  if (grid.size() < min_points)
    throw std::domain_error(std::string(what) + ": grid too small");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
      throw std::domain_error(std::string(what) + ": grid must be positive and finite");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw std::domain_error(std::string(what) + ": grid must be strictly increasing");
  }
}

// second differences of ys against xs on a (possibly nonuniform) grid
std::vector<double> second_differences(std::span<const double> xs,
                                       std::span<const double> ys) {
  std::vector<double> out;
  out.reserve(xs.size() - 2);
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    double s1 = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]);
    double s2 = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    out.push_back(2.0 * (s2 - s1) / (xs[i + 1] - xs[i - 1]));
  }
  return out;
}

}  // namespace

MaergoizFunction::MaergoizFunction(VFamily family, double rho, double b,
                                   double gamma)
    : family_(family), rho_(rho), b_(b), gamma_(gamma) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::invalid_argument("rho must be positive");
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("gamma must be positive");
  if (!std::isfinite(b)) throw std::invalid_argument("b must be finite");
  if (family == VFamily::power_log && gamma > 2.0)
    throw std::invalid_argument(
        "power_log needs gamma <= 2 (principal log branch)");
}

MaergoizFunction MaergoizFunction::power(double rho, double gamma) {
  return MaergoizFunction(VFamily::power, rho, 0.0, gamma);
}

MaergoizFunction MaergoizFunction::power_log(double rho, double b,
                                             double gamma) {
  return MaergoizFunction(VFamily::power_log, rho, b, gamma);
}

MaergoizFunction MaergoizFunction::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw std::invalid_argument("scale factor must be positive");
  MaergoizFunction out = *this;
  out.log_scale_ += std::log(factor);
  return out;
}

LogComplex MaergoizFunction::log_value(double modulus, double argument) const {
  if (!(modulus > 0.0) || !std::isfinite(modulus))
    throw std::domain_error("modulus must be positive");
  if (!(std::abs(argument) < gamma_ * std::numbers::pi / 2.0))
    throw std::domain_error("argument outside the sector");
  if (family_ == VFamily::power)
    return {log_scale_ + rho_ * std::log(modulus), rho_ * argument};

  std::complex<double> w(std::numbers::e + modulus * std::cos(argument),
                         modulus * std::sin(argument));
  std::complex<double> l = std::log(w);   // principal; w never on the cut
  std::complex<double> ll = std::log(l);  // principal; Im l = 0 => Re l >= 1
  return {log_scale_ + rho_ * std::log(modulus) + b_ * ll.real(),
          rho_ * argument + b_ * ll.imag()};
}

std::complex<double> MaergoizFunction::value(double modulus,
                                             double argument) const {
  LogComplex lv = log_value(modulus, argument);
  return std::polar(std::exp(lv.log_modulus), lv.argument);
}

double MaergoizFunction::value_real(double r) const {
  return std::exp(log_value(r, 0.0).log_modulus);
}

double rho_v(const MaergoizFunction& v, double r) {
  if (!(r > 1.0)) throw std::domain_error("rho_V needs r > 1");
  if (v.family() == VFamily::power && v.log_scale() == 0.0) return v.rho();
  return v.log_value(r, 0.0).log_modulus / std::log(r);
}

HomogeneityReport property_i_check(const MaergoizFunction& v,
                                   std::span<const PolarPoint> z_grid,
                                   std::span<const double> r_seq) {
  if (z_grid.empty()) throw std::domain_error("property I needs a z grid");
  require_grid(r_seq, 1, "property I r sequence");

  HomogeneityReport out;
  out.series.reserve(r_seq.size());
  for (double r : r_seq) {
    double worst = 0.0;
    LogComplex base = v.log_value(r, 0.0);
    for (const auto& z : z_grid) {
      LogComplex top = v.log_value(z.modulus * r, z.argument);
      std::complex<double> ratio = std::polar(
          std::exp(top.log_modulus - base.log_modulus), top.argument - base.argument);
      std::complex<double> target =
          std::polar(std::pow(z.modulus, v.rho()), v.rho() * z.argument);
      worst = std::max(worst, std::abs(ratio - target));
    }
    out.series.push_back({r, worst});
  }
  out.deviation = out.series.back().deviation;
  return out;
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::boundary: return "boundary";
    case CheckStatus::fail: return "fail";
  }
  return "?";
}

GrowthReport property_iii_to_v_check(const MaergoizFunction& v,
                                     std::span<const double> r_grid) {
  require_grid(r_grid, 32, "property III-V");

  const std::size_t n = r_grid.size();
  std::vector<double> lm(n), big_v(n), log_r(n);
  double v_max = 0.0, lm_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lm[i] = v.log_value(r_grid[i], 0.0).log_modulus;
    big_v[i] = std::exp(lm[i]);
    if (!std::isfinite(big_v[i]))
      throw std::domain_error("V overflows on this grid; shrink the range");
    log_r[i] = std::log(r_grid[i]);
    v_max = std::max(v_max, big_v[i]);
    lm_max = std::max(lm_max, std::abs(lm[i]));
  }

  GrowthReport rep;
  rep.small_end_value = big_v.front();
  rep.iii_margin = big_v[1] - big_v[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    rep.iii_margin = std::min(rep.iii_margin, big_v[i + 1] - big_v[i]);
  rep.iii = (rep.iii_margin > 0.0 && rep.small_end_value < 0.1)
                ? CheckStatus::pass
                : CheckStatus::fail;

  auto classify = [](double margin, bool want_positive, double tol) {
    if (std::abs(margin) <= tol) return CheckStatus::boundary;
    bool ok = want_positive ? margin > 0.0 : margin < 0.0;
    return ok ? CheckStatus::pass : CheckStatus::fail;
  };

  auto d2_iv = second_differences(log_r, big_v);
  rep.iv_margin = *std::min_element(d2_iv.begin(), d2_iv.end());
  rep.iv = classify(rep.iv_margin, true, 1e-12 * std::max(1.0, v_max));

  auto d2_v = second_differences(log_r, lm);
  rep.v_margin = *std::max_element(d2_v.begin(), d2_v.end());
  rep.v = classify(rep.v_margin, false, 1e-12 * std::max(1.0, lm_max));

  auto d2_r = second_differences(r_grid, lm);
  rep.v_in_r_margin = d2_r[0] * r_grid[1] * r_grid[1];
  for (std::size_t i = 1; i < d2_r.size(); ++i)
    rep.v_in_r_margin =
        std::max(rep.v_in_r_margin, d2_r[i] * r_grid[i + 1] * r_grid[i + 1]);
  rep.v_in_r = classify(rep.v_in_r_margin, false, 1e-9);

  return rep;
}

MvBounds mv_bounds(const AssociatedFunction& m, const MaergoizFunction& v,
                   std::span<const double> t_grid) {
  require_grid(t_grid, 2, "mv_bounds");

  MvBounds out;
  out.t0_used = t_grid.front();
  bool first = true;
  for (double t : t_grid) {
    double ratio = m.value(t) / v.value_real(t);
    if (!std::isfinite(ratio))
      throw std::domain_error("M/V ratio not finite on this grid");
    if (first) {
      out.a_est = out.b_est = ratio;
      first = false;
    } else {
      out.a_est = std::min(out.a_est, ratio);
      out.b_est = std::max(out.b_est, ratio);
    }
  }
  out.bounded = out.a_est > 0.0 && out.b_est <= 100.0 * out.a_est;
  return out;
}

}  // namespace asymp
