#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asymp {

// Sector in the Riemann surface of log: bisecting direction d (radians),
// opening pi*gamma, optional finite radius.
struct SectorSpec {
  double d = 0.0;
  double gamma = 1.0;
  std::optional<double> r;
};

enum class ProfileBranch { left, plateau, right };

const char* branch_name(ProfileBranch b);

struct TypeProfile {
  double k = 1.0;
  double theta0 = 0.0;
  double r0 = 1.0;
  double alpha = 0.0;    // left boundary direction d - pi*gamma/2
  double beta = 0.0;     // right boundary direction d + pi*gamma/2
  double alpha_p = 0.0;  // plateau start: min(theta0, alpha + pi/(2k))
  double beta_p = 0.0;   // plateau end:  max(theta0, beta - pi/(2k))
  struct Sample {
    double theta = 0.0;
    double r = 0.0;
    ProfileBranch branch = ProfileBranch::plateau;
  };
  std::vector<Sample> samples;
};

// Directional type profile for order-1/k asymptotics on the sector: a known
// type R0 in direction theta0 propagates as
//   R(theta) = R0 * (sin(k(theta-alpha)) / sin(k(alpha_p-alpha)))^(1/k)
// on (alpha, alpha_p], stays flat at R0 on [alpha_p, beta_p], and mirrors on
// [beta_p, beta).  Grid points landing exactly on alpha_p/beta_p count as
// plateau.  Every grid direction (and theta0) must lie strictly inside
// (alpha, beta); the profile is not defined on the boundary.
TypeProfile type_profile(double k, const SectorSpec& sector, double theta0,
                         double r0, std::span<const double> theta_grid);

// CSV export, one row per sample: theta,R,branch with 12 significant digits.
std::string profile_to_csv(const TypeProfile& profile);

}  // namespace asymp
