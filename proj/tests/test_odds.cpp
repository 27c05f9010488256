#include <doctest.h>

#include <cmath>
#include <random>

#include "gor/errors.hpp"
#include "gor/events.hpp"
#include "gor/odds.hpp"

using namespace gor;

namespace {

Coefficients coeffs(double intercept, std::vector<double> betas) {
  Coefficients c;
  c.intercept = intercept;
  c.betas = std::move(betas);
  return c;
}

// Small deterministic coefficient generator for the property checks. The
// ranges keep |log-odds| modest so 1 - p never collapses onto zero.
Coefficients random_coeffs(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> beta_range(-1.0, 1.0);
  std::uniform_real_distribution<double> intercept_range(-0.5, 0.5);
  Coefficients c;
  c.intercept = intercept_range(rng);
  for (int i = 0; i < n; ++i) {
    c.betas.push_back(beta_range(rng));
  }
  return c;
}

}  // namespace

TEST_CASE("log_odds is the linear predictor") {
  const Coefficients zero = coeffs(0.0, {0.0, 0.0, 0.0});
  for (const Event& e : enumerate_events(3)) {
    CHECK(log_odds(zero, e) == 0.0);
  }
  CHECK(log_odds(coeffs(2.5, {1.0, 1.0}), all_zeros(2)) == 2.5);
  CHECK(log_odds(coeffs(1.0, {2.0, 3.0}), event_from_number(2, 2)) == 3.0);
}

TEST_CASE("log_odds rejects dimension mismatches") {
  CHECK_THROWS_AS(log_odds(coeffs(0.0, {1.0}), all_zeros(2)), DomainError);
}

TEST_CASE("odds_of_event exponentiates the log-odds") {
  CHECK(odds_of_event(coeffs(0.0, {0.0, 0.0}), all_ones(2)) == 1.0);
  CHECK(odds_of_event(coeffs(std::log(2.0), {1.0}), all_zeros(1)) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(odds_of_event(coeffs(0.0, {std::log(3.0)}), all_ones(1)) ==
        doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("odds_of_event refuses overflowing log-odds") {
  CHECK_THROWS_WITH_AS(odds_of_event(coeffs(701.0, {0.0}), all_zeros(1)),
                       doctest::Contains("701"), RangeError);
  CHECK_THROWS_AS(odds_of_event(coeffs(-800.0, {0.0}), all_zeros(1)),
                  RangeError);
  // 700 itself is still inside the limit
  CHECK(std::isfinite(odds_of_event(coeffs(700.0, {0.0}), all_zeros(1))));
}

TEST_CASE("probability_of_event inverts the odds") {
  CHECK(probability_of_event(coeffs(0.0, {0.0}), all_zeros(1)) == 0.5);
  const Coefficients three = coeffs(std::log(3.0), {0.0});
  CHECK(probability_of_event(three, all_zeros(1)) ==
        doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("probability stays strictly inside (0,1) at extreme log-odds") {
  const double hi = probability_of_event(coeffs(1000.0, {0.0}), all_zeros(1));
  const double lo = probability_of_event(coeffs(-1000.0, {0.0}), all_zeros(1));
  CHECK(hi < 1.0);
  CHECK(hi > 0.999999);
  CHECK(lo > 0.0);
  CHECK(lo < 1e-6);
}

TEST_CASE("probability/(1-probability) reproduces the odds") {
  std::mt19937_64 rng(20210);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const Coefficients c = random_coeffs(rng, n);
      for (const Event& e : stream_events(n)) {
        const double p = probability_of_event(c, e);
        const double odds = odds_of_event(c, e);
        CHECK(p / (1.0 - p) ==
              doctest::Approx(odds).epsilon(1e-12));
        CHECK(odds > 0.0);
      }
    }
  }
}

TEST_CASE("oracle_odds_ratio is the literal odds quotient") {
  const Coefficients zero = coeffs(0.3, {0.0, 0.0, 0.0});
  CHECK(oracle_odds_ratio(zero, all_zeros(3), all_ones(3)) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Independent route: quotient of probability odds p/(1-p).
  const Coefficients c =
      coeffs(0.7, {std::log(2.0), std::log(3.0), std::log(5.0)});
  const Event e0 = all_zeros(3);
  const Event e5 = event_from_number(3, 5);
  const double p0 = probability_of_event(c, e0);
  const double p5 = probability_of_event(c, e5);
  const double via_probabilities = (p5 / (1.0 - p5)) / (p0 / (1.0 - p0));
  CHECK(oracle_odds_ratio(c, e0, e5) ==
        doctest::Approx(via_probabilities).epsilon(1e-12));
  CHECK(oracle_odds_ratio(c, e0, e5) == doctest::Approx(10.0).epsilon(1e-12));

  const Event e4 = event_from_number(3, 4);
  const Event e7 = all_ones(3);
  CHECK(oracle_odds_ratio(c, e4, e7) == doctest::Approx(15.0).epsilon(1e-12));
}

TEST_CASE("oracle_odds_ratio rejects identical events") {
  const Coefficients c = coeffs(0.0, {1.0, 2.0});
  CHECK_THROWS_WITH_AS(oracle_odds_ratio(c, all_zeros(2), all_zeros(2)),
                       doctest::Contains("E_r != E_t"), DomainError);
}

TEST_CASE("oracle_odds_ratio is invariant under intercept shifts") {
  std::mt19937_64 rng(977);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const Coefficients c = random_coeffs(rng, n);
      Coefficients shifted = c;
      shifted.intercept += (rep % 2 == 0 ? 4.5 : -2.25);
      for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
        const Event target = event_from_number(n, t);
        const double base = oracle_odds_ratio(c, all_zeros(n), target);
        const double moved = oracle_odds_ratio(shifted, all_zeros(n), target);
        CHECK(moved == doctest::Approx(base).epsilon(1e-12));
      }
    }
  }
}
