#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asymp/assoc_fn.hpp"
#include "asymp/gevrey_type.hpp"
#include "asymp/maergoiz.hpp"
#include "asymp/sequences.hpp"

namespace asymp {

// Test functions evaluated in log/argument form so the flat regime
// (magnitudes far below double underflow) stays representable.
class TestFunction {
 public:
  static TestFunction exp_flat(const MaergoizFunction& v);   // e^{-V(1/z)}
  static TestFunction wasow(const MaergoizFunction& v);      // sin(e^{V(1/z)}) e^{-V(1/z)}
  static TestFunction corrected(const TestFunction& base, const MaergoizFunction& v,
                                std::complex<double> a);     // base(z) e^{V(a/z)}
  static TestFunction user(std::string name,
                           std::function<LogComplex(double r, double theta)> eval);

  LogComplex log_value(double r, double theta) const;
  std::complex<double> value(double r, double theta) const;
  const std::string& name() const { return name_; }

 private:
  TestFunction(std::string name, std::function<LogComplex(double, double)> eval);
  std::string name_;
  std::function<LogComplex(double, double)> eval_;
};

struct RayTrace {
  double theta = 0.0;
  std::vector<double> radii;    // strictly decreasing, >= 16 points
  std::vector<double> log_abs;  // log|f| at each radius
};

RayTrace trace_ray(const TestFunction& f, double theta, std::span<const double> radii);

// log|f(z)| <= log c1 - M(1/(c2 |z|)) on every sample (within 1e-9) when flat.
struct FlatnessFit {
  double theta = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double residual = 0.0;  // loosest gap of the fitted bound over the samples
  bool flat = false;
  std::string diagnostic;
};

FlatnessFit fit_flat_type(const RayTrace& trace, const AssociatedFunction& a);

struct MvBand {
  double a_est = 0.0;
  double b_est = 0.0;
  double omega = 0.0;
};

struct PropagationRow {
  double delta = 0.0;
  double k2_fitted = 0.0;
  double k2_predicted_bound = 0.0;
  bool satisfied = false;
};

struct PropagationTable {
  FlatnessFit flat_fit;
  std::vector<PropagationRow> rows;
  bool all_satisfied = false;
  bool aborted = false;
  std::string diagnostic;
};

// Fits k2 at -pi*gamma/2 + delta for each delta and compares against
// (2 B/A)^omega (1/sin(delta/(2 omega)))^omega c2.
PropagationTable propagation_experiment(const TestFunction& f, const AssociatedFunction& a,
                                        double gamma, double flat_direction,
                                        std::span<const double> delta_grid, const MvBand& mv,
                                        double r0 = 0.5);

struct TwoDirectionResult {
  double k1 = 0.0;
  double k2 = 0.0;
  bool uniform = false;
  std::optional<double> failing_direction;
  std::vector<FlatnessFit> fits;  // fan order, ascending direction
};

TwoDirectionResult two_direction_experiment(const TestFunction& f, const AssociatedFunction& a,
                                            double gamma, double r0 = 0.5,
                                            std::size_t fan_size = 17);

// Maximum-modulus sanity check on sampled grids; log-domain because the
// interesting violations overflow linear doubles.
struct PlCheckResult {
  double max_boundary_log = 0.0;
  double max_interior_log = 0.0;
  bool satisfied = false;
};

PlCheckResult pl_numeric_check(const TestFunction& f, const SectorSpec& sector,
                               std::size_t boundary_n, std::size_t interior_n);

// Correction point for F(z) = f(z) e^{V(a/z)}: arg a = omega pi/2 - pi gamma/2 + delta/2,
// |a| = (A d2/2)^omega / 2 with d2 = 0.9 c2^{-1/omega}.
struct ProofRecipe {
  std::complex<double> a;
  double d2 = 0.0;
  double modulus = 0.0;
  double argument = 0.0;
};

ProofRecipe proof_recipe_a(double a_est, double c2, double omega, double gamma, double delta);

struct WasowDemo {
  FlatnessFit flat_fit_on_axis;
  std::vector<std::pair<double, double>> derivative_samples;  // (r, f'(r))
  bool oscillation_detected = false;
  // subsequences where e^{V(1/r)} hits pi n + pi/2 (cos zero; derivative -> 0)
  // and pi n (sin zero; derivative rides the V'(1/r)/r^2 envelope)
  std::vector<std::pair<double, double>> cos_zero_samples;
  std::vector<std::pair<double, double>> sin_zero_samples;
};

WasowDemo wasow_demo(const MaergoizFunction& v, const AssociatedFunction& a,
                     std::span<const double> radii);

// |f(z) - sum_{n<p} a_n z^n| <= C A^p M_p |z|^p for all p <= p_max and samples.
struct ExpansionFit {
  double theta = 0.0;
  double C = 0.0;
  double A = 0.0;
  std::size_t p_max = 0;
  std::vector<double> per_p_slack;  // log C minus each order's binding value; >= 0
  std::size_t dropped_samples = 0;
  std::vector<std::string> warnings;
  bool fitted = false;
  std::string diagnostic;
};

ExpansionFit expansion_fit(const TestFunction& f, std::span<const double> coeffs,
                           const WeightSequence& w, double theta,
                           std::span<const double> radii);

struct ExtensionResult {
  std::vector<ExpansionFit> rows;  // fan order
  bool success = false;
  std::string diagnostic;
};

ExtensionResult extension_experiment(const TestFunction& f, std::span<const double> coeffs,
                                     const WeightSequence& w, const SectorSpec& g,
                                     double theta0, std::span<const double> fan,
                                     double r0 = 0.5);

}  // namespace asymp
