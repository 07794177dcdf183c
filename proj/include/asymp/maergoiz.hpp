#pragma once

#include <complex>
#include <span>
#include <vector>

#include "asymp/assoc_fn.hpp"

namespace asymp {

// point on the Riemann surface of log, kept as (modulus, argument) so large
// arguments never wrap
struct PolarPoint {
  double modulus = 1.0;
  double argument = 0.0;
};

struct LogComplex {
  double log_modulus = 0.0;
  double argument = 0.0;
};

enum class VFamily { power, power_log };

// Concrete sectorial comparison function V on S_gamma.  Two families:
//   power(rho):        V(z) = z^rho
//   power_log(rho, b): V(z) = z^rho * (log(e+z))^b, principal branches;
//                      log(e+z) stays off the cut for |arg z| < pi, hence
//                      the gamma <= 2 restriction for this family.
// Both have real coefficients, so V(conj z) = conj(V(z)) holds exactly.
class MaergoizFunction {
 public:
  static MaergoizFunction power(double rho, double gamma);
  static MaergoizFunction power_log(double rho, double b, double gamma);

  // factor * V with factor > 0; rescaling preserves every sector property
  MaergoizFunction scaled(double factor) const;

  // core evaluation; requires modulus > 0 and |argument| < gamma*pi/2
  LogComplex log_value(double modulus, double argument) const;
  std::complex<double> value(double modulus, double argument) const;
  double value_real(double r) const;  // V on the positive axis

  VFamily family() const { return family_; }
  double rho() const { return rho_; }
  double b() const { return b_; }
  double gamma() const { return gamma_; }
  double log_scale() const { return log_scale_; }

 private:
  MaergoizFunction(VFamily family, double rho, double b, double gamma);

  VFamily family_;
  double rho_;
  double b_;
  double gamma_;
  double log_scale_ = 0.0;
};

// log V(r) / log r for r > 1; tends to rho for both families.  For the
// unscaled power family this is the identity rho.
double rho_v(const MaergoizFunction& v, double r);

struct DecayPoint {
  double r = 0.0;
  double deviation = 0.0;
};

// sup_z |V(zr)/V(r) - z^rho| at the largest r of r_seq, with the decay
// series over all of r_seq.  z_grid must sit inside the sector.
struct HomogeneityReport {
  double deviation = 0.0;
  std::vector<DecayPoint> series;
};
HomogeneityReport property_i_check(const MaergoizFunction& v,
                                   std::span<const PolarPoint> z_grid,
                                   std::span<const double> r_seq);

enum class CheckStatus { pass, boundary, fail };
const char* check_status_name(CheckStatus s);

// Growth-shape checks over a strictly increasing positive grid (>= 32 pts):
//   iii: V strictly increasing, and the grid reaches small enough r that
//        V(front) < 0.1 (the vanishing end); margin = min forward difference
//   iv:  second differences of V against log r strictly positive (convexity
//        of V(e^t)); margin = worst (minimum) second difference
//   v:   second differences of log V against log r strictly negative;
//        margin = worst (maximum); an affine profile (pure power) lands at 0
//        and is reported as boundary rather than fail
//   v_in_r: the same concavity taken against r itself and normalized by r^2
//        (dimensionless curvature); strictly negative for both families on
//        (0, inf) -- kept as a diagnostic alongside the contracted v check
struct GrowthReport {
  CheckStatus iii = CheckStatus::fail;
  double iii_margin = 0.0;
  double small_end_value = 0.0;
  CheckStatus iv = CheckStatus::fail;
  double iv_margin = 0.0;
  CheckStatus v = CheckStatus::fail;
  double v_margin = 0.0;
  CheckStatus v_in_r = CheckStatus::fail;
  double v_in_r_margin = 0.0;
};
GrowthReport property_iii_to_v_check(const MaergoizFunction& v,
                                     std::span<const double> r_grid);

// min / max of M(t)/V(t) over the grid; the caller supplies the tail grid
// (everything beyond their t0).  bounded means the band is genuinely two
// sided: positive lower end and spread below a factor of 100.
struct MvBounds {
  double a_est = 0.0;
  double b_est = 0.0;
  double t0_used = 0.0;
  bool bounded = false;
};
MvBounds mv_bounds(const AssociatedFunction& m, const MaergoizFunction& v,
                   std::span<const double> t_grid);

}  // namespace asymp
