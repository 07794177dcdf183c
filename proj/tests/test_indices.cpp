#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "asymp/indices.hpp"
#include "asymp/sequences.hpp"

using namespace asymp;

namespace {
constexpr std::size_t kHorizon = 1000000;
constexpr std::size_t kWindow = 100000;
}  // namespace

TEST_CASE("omega recovers the gevrey index") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    auto est = omega(WeightSequence::gevrey(alpha, kHorizon), kWindow);
    CHECK(std::abs(est.estimate - alpha) <= 1e-3);
    REQUIRE(est.series.size() == 4);
    CHECK(est.series.back().horizon == kHorizon);
    CHECK(est.series.back().value == est.estimate);
    // estimator approaches the limit from above as the horizon grows
    CHECK(est.series.front().value >= est.series.back().value);
  }
}

TEST_CASE("omega for alpha_beta includes the slowly varying correction") {
  // log m_p / log p = 2 + log log(e+p+1)/log p + O(1/p): the correction decays
  // like log log p / log p and is still ~0.19 at p = 1e6.
  auto est = omega(WeightSequence::alpha_beta(2.0, 1.0, kHorizon), kWindow);
  CHECK(est.estimate == doctest::Approx(2.190061329277519).epsilon(1e-8));
  CHECK(est.estimate > 2.15);
  CHECK(est.estimate < 2.25);
}

TEST_CASE("omega requires a usable window") {
  auto w = WeightSequence::gevrey(1.0, 64);
  CHECK_THROWS_AS(omega(w, 4), std::domain_error);
  CHECK_THROWS_AS(omega(w, 10), std::domain_error);  // horizon < 10*window
}

TEST_CASE("exponent of convergence on closed-form sequences") {
  std::vector<double> logc(kHorizon);

  for (std::size_t n = 0; n < kHorizon; ++n) logc[n] = std::log(n + 1.0);
  CHECK(std::abs(exponent_of_convergence(logc, kWindow) - 1.0) <= 1e-3);

  for (std::size_t n = 0; n < kHorizon; ++n) logc[n] = 2.0 * std::log(n + 1.0);
  CHECK(std::abs(exponent_of_convergence(logc, kWindow) - 0.5) <= 1e-3);

  for (std::size_t n = 0; n < kHorizon; ++n) logc[n] = n * std::log(2.0);
  CHECK(std::abs(exponent_of_convergence(logc, kWindow)) <= 1e-2);
}

TEST_CASE("exponent of convergence rejects non-growing tails") {
  std::vector<double> logc(1024);
  for (std::size_t n = 0; n < logc.size(); ++n) logc[n] = std::log(n + 1.0);
  logc[900] = logc[899] - 0.5;  // tail dip
  CHECK_THROWS_AS(exponent_of_convergence(logc, 100), std::domain_error);

  std::vector<double> flat(1024, 1.0);  // bounded c
  CHECK_THROWS_AS(exponent_of_convergence(flat, 100), std::domain_error);
}

TEST_CASE("convergence-exponent identities for gevrey") {
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    auto w = WeightSequence::gevrey(alpha, kHorizon);
    double om = omega(w, kWindow).estimate;
    auto lq = log_quotients(w);
    double lam_m = exponent_of_convergence(lq, kWindow);
    std::vector<double> lpm(lq.size());
    for (std::size_t p = 0; p < lq.size(); ++p) lpm[p] = std::log(p + 1.0) + lq[p];
    double lam_pm = exponent_of_convergence(lpm, kWindow);
    CHECK(std::abs(lam_m * om - 1.0) <= 2e-2);
    CHECK(std::abs(lam_pm * (om + 1.0) - 1.0) <= 2e-2);
  }
}

TEST_CASE("b_limit matches omega for gevrey and diverges for q_square") {
  auto bl = b_limit(WeightSequence::gevrey(1.0, kHorizon), kWindow);
  CHECK(bl.converged);
  CHECK(bl.estimate == doctest::Approx(0.9999931732994476).epsilon(1e-8));
  CHECK(std::abs(bl.estimate - 1.0) <= 1e-2);

  auto bl2 = b_limit(WeightSequence::gevrey(2.0, kHorizon), kWindow);
  CHECK(bl2.converged);
  CHECK(std::abs(bl2.estimate - 2.0) <= 1e-2);

  // log m_p - log(M_p)/p = (p+1) log q: no finite limit
  auto bl3 = b_limit(WeightSequence::q_square(2.0, 100000), 10000);
  CHECK(!bl3.converged);
}

TEST_CASE("regvar ratios approach ell^omega for gevrey") {
  std::size_t mult2[] = {2};
  std::size_t probe[] = {100000};
  auto rows = regvar_test(WeightSequence::gevrey(1.0, kHorizon), mult2, probe);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ratio == doctest::Approx(1.9999900004985323).epsilon(1e-8));
  CHECK(rows[0].pass);
  CHECK(!rows[0].diverged);

  std::size_t mult4[] = {4};
  auto rows3 = regvar_test(WeightSequence::gevrey(3.0, kHorizon), mult4, probe);
  REQUIRE(rows3.size() == 1);
  CHECK(rows3[0].ratio == doctest::Approx(63.99855995431269).epsilon(1e-8));
  CHECK(rows3[0].target == doctest::Approx(64.0).epsilon(1e-6));
  CHECK(rows3[0].pass);
}

TEST_CASE("regvar multiplier one is the identity row") {
  std::size_t mult[] = {1};
  std::size_t probe[] = {500};
  auto rows = regvar_test(WeightSequence::gevrey(1.0, 10000), mult, probe);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ratio == 1.0);
  CHECK(rows[0].pass);
}

TEST_CASE("regvar flags q_square as divergent") {
  std::size_t mult[] = {2, 3, 4};
  std::size_t probe[] = {100, 1000};
  auto rows = regvar_test(WeightSequence::q_square(2.0, 10000), mult, probe);
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.diverged);
    CHECK(!row.pass);
  }
}

TEST_CASE("regvar rejects out-of-range probes") {
  std::size_t mult[] = {4};
  std::size_t probe[] = {300};
  CHECK_THROWS_AS(regvar_test(WeightSequence::gevrey(1.0, 1000), mult, probe),
                  std::domain_error);
}

TEST_CASE("index report bundles all estimators coherently") {
  auto rep = index_report(WeightSequence::gevrey(1.0, kHorizon));
  CHECK(std::abs(rep.omega_estimate - 1.0) <= 1e-3);
  CHECK(std::abs(rep.lambda_m * rep.omega_estimate - 1.0) <= 2e-2);
  CHECK(std::abs(rep.lambda_pm * (rep.omega_estimate + 1.0) - 1.0) <= 2e-2);
  CHECK(rep.b_limit_converged);
  CHECK(std::abs(rep.b_limit_estimate - rep.omega_estimate) <= 2e-2);
  REQUIRE(!rep.regvar_table.empty());
  for (const auto& row : rep.regvar_table) CHECK(row.pass);
  REQUIRE(rep.omega_window_series.size() == 4);
}
