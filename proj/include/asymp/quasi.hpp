#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asymp/sequences.hpp"

namespace asymp {

enum class SeriesOutcome { diverges, converges, inconclusive };

struct PartialSum {
  std::size_t horizon = 0;
  double value = 0.0;
};

struct SeriesVerdict {
  SeriesOutcome verdict = SeriesOutcome::inconclusive;
  double s_exponent = 0.0;                   // power-scale exponent of the terms
  std::optional<double> bertrand_exponent;   // log-power refinement, set when s ~ 1
  std::vector<PartialSum> partial_sums;      // recorded at dyadic horizons
};

// Comparison-test engine for positive series.  Estimates the power exponent
// s from the tail (least squares of -log t_p against log p over a geometric
// sample of [horizon/4, horizon)); if s is within tol of 1, refines with the
// log-power exponent -log(p t_p)/log log p.  The double-borderline s ~ 1,
// bertrand ~ 1 is decided as divergent only when the terms actually hug
// 1/(p log p) (flat residual); anything else stays inconclusive.
//
// Requires horizon >= 64 and every term positive and finite.
SeriesVerdict series_classify(const std::function<double(std::size_t)>& term,
                              std::size_t horizon, double tol = 0.2);

enum class Ternary { yes, no, inconclusive };

struct QuasiVerdict {
  Ternary quasianalytic = Ternary::inconclusive;
  std::string reason;                   // which branch fired, with numbers
  std::optional<SeriesVerdict> series;  // present when a series test decided
};

// gamma vs omega split with the boundary decided by the series
// sum_p ((p+1) m_p)^(-1/(omega+1)).  Inconclusive when the omega estimate
// has not settled between the half and full horizon.
QuasiVerdict classify_salinas(const WeightSequence& w, double gamma,
                              double omega_tol = 1e-3);

// Criterion for uniform asymptotics: quasianalytic iff sum_p (1/m_p)^(1/gamma)
// diverges.  The series is the primary test; the gamma-vs-omega split is only
// a fallback when the series engine cannot decide.
QuasiVerdict classify_watson_uniform(const WeightSequence& w, double gamma,
                                     double omega_tol = 1e-3);

// Criterion over sectorial regions: quasianalytic iff gamma > omega strictly;
// equality already admits a nontrivial flat function.  Requires the caller to
// have established that the sequence admits a nonzero proximate order
// (regvar_test, or an explicit assertion) -- without that flag the theorem
// does not apply and the verdict is inconclusive.
QuasiVerdict classify_watson_regions(const WeightSequence& w, double gamma,
                                     bool proximate_order_established);

}  // namespace asymp
