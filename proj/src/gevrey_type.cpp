#include "asymp/gevrey_type.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace asymp {

const char* branch_name(ProfileBranch b) {
  switch (b) {
    case ProfileBranch::left: return "left";
    case ProfileBranch::plateau: return "plateau";
    case ProfileBranch::right: return "right";
  }
  return "?";
}

TypeProfile type_profile(double k, const SectorSpec& sector, double theta0,
                         double r0, std::span<const double> theta_grid) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw std::invalid_argument("order parameter k must be positive");
  if (!(sector.gamma > 0.0) || !std::isfinite(sector.gamma))
    throw std::invalid_argument("sector opening gamma must be positive");
  if (sector.r && !(*sector.r > 0.0))
    throw std::invalid_argument("sector radius must be positive");
  if (!(r0 > 0.0) || !std::isfinite(r0))
    throw std::invalid_argument("given type R0 must be positive");

  TypeProfile out;
  out.k = k;
  out.theta0 = theta0;
  out.r0 = r0;
  out.alpha = sector.d - std::numbers::pi * sector.gamma / 2.0;
  out.beta = sector.d + std::numbers::pi * sector.gamma / 2.0;
  if (!(theta0 > out.alpha && theta0 < out.beta))
    throw std::domain_error("theta0 must lie strictly inside the sector");
  out.alpha_p = std::min(theta0, out.alpha + std::numbers::pi / (2.0 * k));
  out.beta_p = std::max(theta0, out.beta - std::numbers::pi / (2.0 * k));

  const double left_den = std::sin(k * (out.alpha_p - out.alpha));
  const double right_den = std::sin(k * (out.beta - out.beta_p));

  out.samples.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    if (!(theta > out.alpha && theta < out.beta))
      throw std::domain_error("profile direction on or outside the sector boundary");
    TypeProfile::Sample s;
    s.theta = theta;
    if (theta < out.alpha_p) {
      s.branch = ProfileBranch::left;
      s.r = r0 * std::pow(std::sin(k * (theta - out.alpha)) / left_den, 1.0 / k);
    } else if (theta > out.beta_p) {
      s.branch = ProfileBranch::right;
      s.r = r0 * std::pow(std::sin(k * (out.beta - theta)) / right_den, 1.0 / k);
    } else {
      s.branch = ProfileBranch::plateau;
      s.r = r0;
    }
    out.samples.push_back(s);
  }
  return out;
}

std::string profile_to_csv(const TypeProfile& profile) {
  if (profile.samples.empty())
    throw std::domain_error("profile has no samples to export");
  std::string csv = "theta,R,branch\n";
  char buf[96];
  for (const auto& s : profile.samples) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%s\n", s.theta, s.r,
                  branch_name(s.branch));
    csv += buf;
  }
  return csv;
}

}  // namespace asymp
