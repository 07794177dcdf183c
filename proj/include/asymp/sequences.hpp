#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asymp {

// All sequence arithmetic is carried out on log(M_p).  Linear values overflow
// double well before the horizons used here (p! at p ~ 170, q^(p^2) much sooner).

enum class SequenceFamily { gevrey, alpha_beta, zero_beta, q_square, custom };

struct FamilyParams {
  SequenceFamily family = SequenceFamily::custom;
  double alpha = 0.0;
  double beta = 0.0;
  double q = 0.0;
};

class WeightSequence {
 public:
  // log_terms[p] = log M_p for p = 0..horizon; log_terms[0] must be 0.
  WeightSequence(FamilyParams params, std::vector<double> log_terms);

  // M_p = (p!)^alpha
  static WeightSequence gevrey(double alpha, std::size_t horizon);
  // M_p = (p!)^alpha * prod_{m=0..p} log(e+m)^beta
  static WeightSequence alpha_beta(double alpha, double beta, std::size_t horizon);
  // M_p = prod_{m=0..p} log(e+m)^beta
  static WeightSequence zero_beta(double beta, std::size_t horizon);
  // M_p = q^(p^2), q > 1
  static WeightSequence q_square(double q, std::size_t horizon);
  static WeightSequence custom(std::vector<double> log_terms);
  // UTF-8 text, one log M_p per line; the first line must be 0.
  static WeightSequence from_file(const std::string& path);

  std::size_t horizon() const { return log_terms_.size() - 1; }
  double log_term(std::size_t p) const { return log_terms_[p]; }
  std::span<const double> log_terms() const { return log_terms_; }
  const FamilyParams& params() const { return params_; }

 private:
  FamilyParams params_;
  std::vector<double> log_terms_;
};

// log m_p = log(M_{p+1}/M_p) for p = 0..horizon-1.
std::vector<double> log_quotients(const WeightSequence& w);

struct TrendEstimate {
  double estimate = 0.0;    // finite-horizon supremum of the defining constant
  bool bounded_trend = false;  // estimate stabilized between half and full horizon
};

struct LcReport {
  bool holds_up_to_horizon = false;
  std::optional<std::size_t> first_violation;  // quotient index of the first drop
};

struct ConditionReport {
  LcReport lc;
  TrendEstimate dc;   // m_p <= A^(p+1)
  TrendEstimate mg;   // M_{p+q} <= B^(p+q) M_p M_q
  TrendEstimate snq;  // sum_{q>=p} 1/((q+1) m_q) <= C / m_p
  bool quotients_to_infinity = false;
};

// Requires horizon >= 8.  Trend flags compare the estimate at half horizon
// against the full horizon (relative change below trend_tol means bounded).
ConditionReport condition_report(const WeightSequence& w, double trend_tol = 1e-3);

struct EquivalenceEstimate {
  double lower = 0.0;  // inf_p (M_p / L_p)^(1/p)
  double upper = 0.0;  // sup_p (M_p / L_p)^(1/p)
  bool equivalent_trend = false;
};

// Finite-horizon test of M_p <= C a^p L_p and L_p <= C b^p M_p.
EquivalenceEstimate equivalence_estimate(const WeightSequence& w,
                                         const WeightSequence& l,
                                         double trend_tol = 1e-2);

}  // namespace asymp
