#include <doctest.h>

#include <cmath>
#include <random>

#include "gor/errors.hpp"
#include "gor/events.hpp"
#include "gor/odds.hpp"
#include "gor/ratios.hpp"

using namespace gor;

namespace {

Coefficients coeffs(double intercept, std::vector<double> betas) {
  Coefficients c;
  c.intercept = intercept;
  c.betas = std::move(betas);
  return c;
}

Coefficients random_coeffs(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> beta_range(-2.0, 2.0);
  std::uniform_real_distribution<double> intercept_range(-1.0, 1.0);
  Coefficients c;
  c.intercept = intercept_range(rng);
  for (int i = 0; i < n; ++i) {
    c.betas.push_back(beta_range(rng));
  }
  return c;
}

const Coefficients kLogPrimes =
    coeffs(0.0, {std::log(2.0), std::log(3.0), std::log(5.0)});

}  // namespace

TEST_CASE("basic_odds_ratio records exp(b_n) against the all-zeros event") {
  const Coefficients c2 = coeffs(0.4, {0.9, -1.3});
  const OddsRatioRecord r1 = basic_odds_ratio(c2, 1);
  CHECK(r1.kind == RatioKind::basic);
  CHECK(r1.reference.number == 0);
  CHECK(r1.target.number == 2);
  CHECK(r1.exponent == 0.9);
  CHECK(r1.value == std::exp(0.9));
  CHECK(r1.subset.members == std::vector<int>{1});

  const OddsRatioRecord r2 = basic_odds_ratio(kLogPrimes, 2);
  CHECK(r2.target.number == 2);  // {0,1,0}
  CHECK(r2.value == doctest::Approx(3.0).epsilon(1e-14));

  CHECK(basic_odds_ratio(coeffs(1.0, {0.0, 5.0}), 1).value == 1.0);
  CHECK_THROWS_AS(basic_odds_ratio(c2, 3), DomainError);
  CHECK_THROWS_AS(basic_odds_ratio(c2, 0), DomainError);
}

TEST_CASE("odds_ratio_between covers the worked transitions") {
  const Coefficients c2 = coeffs(-0.2, {0.9, -1.3});
  // x2 rising while x1 stays set
  const OddsRatioRecord r = odds_ratio_between(c2, event_from_number(2, 2),
                                               event_from_number(2, 3));
  CHECK(r.kind == RatioKind::basic);
  CHECK(r.exponent == -1.3);
  CHECK(r.value == std::exp(-1.3));
  CHECK(r.subset.members == std::vector<int>{2});

  const OddsRatioRecord r05 =
      odds_ratio_between(kLogPrimes, all_zeros(3), event_from_number(3, 5));
  CHECK(r05.kind == RatioKind::group);
  CHECK(r05.value == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(r05.exponent ==
        doctest::Approx(std::log(2.0) + std::log(5.0)).epsilon(1e-14));
}

TEST_CASE("odds_ratio_between rejects degenerate and lowering transitions") {
  const Coefficients c = coeffs(0.0, {1.0, 2.0});
  CHECK_THROWS_AS(odds_ratio_between(c, all_zeros(2), all_zeros(2)),
                  DomainError);
  // mixed direction names the lowered position
  CHECK_THROWS_WITH_AS(odds_ratio_between(c, event_from_number(2, 2),
                                          event_from_number(2, 1)),
                       doctest::Contains("x1"), DomainError);
  // pure 1 -> 0 is equally out of scope
  CHECK_THROWS_AS(odds_ratio_between(c, all_ones(2), all_zeros(2)),
                  DomainError);
}

TEST_CASE("group_odds_ratio sums the member coefficients") {
  const OddsRatioRecord full =
      group_odds_ratio(kLogPrimes, subset_from_members(3, {1, 2, 3}));
  CHECK(full.value == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(full.reference.number == 0);
  CHECK(full.target.number == 7);

  const OddsRatioRecord s3 =
      group_odds_ratio(kLogPrimes, subset_from_members(3, {2, 3}));
  CHECK(s3.value == doctest::Approx(15.0).epsilon(1e-14));
  CHECK(s3.kind == RatioKind::group);

  // a singleton subset reproduces the basic record
  const OddsRatioRecord s4 =
      group_odds_ratio(kLogPrimes, subset_from_members(3, {1}));
  CHECK(s4.kind == RatioKind::basic);
  CHECK(s4.value == basic_odds_ratio(kLogPrimes, 1).value);

  CHECK_THROWS_WITH_AS(
      group_odds_ratio(kLogPrimes, subset_from_event(all_zeros(3))),
      doctest::Contains("empty"), DomainError);
}

TEST_CASE("inverse_odds_ratio runs all variables from one back to zero") {
  const OddsRatioRecord zero_model = inverse_odds_ratio(coeffs(0.7, {0.0, 0.0}));
  CHECK(zero_model.value == 1.0);
  CHECK(zero_model.kind == RatioKind::inverse);

  const OddsRatioRecord inv = inverse_odds_ratio(kLogPrimes);
  CHECK(inv.reference.number == 7);
  CHECK(inv.target.number == 0);
  // reciprocal of the oracle quotient O(E_0)/O(E_7)
  const double oracle = oracle_odds_ratio(kLogPrimes, all_ones(3), all_zeros(3));
  CHECK(inv.value == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(inv.value == doctest::Approx(1.0 / 30.0).epsilon(1e-12));

  CHECK(inverse_odds_ratio(coeffs(0.0, {std::log(4.0)})).value ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("ensemble emits one record per non-empty subset in target order") {
  const auto records = ensemble(kLogPrimes);
  REQUIRE(records.size() == 7);
  const double expected[] = {5.0, 3.0, 15.0, 2.0, 10.0, 6.0, 30.0};
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].target.number == i + 1);
    CHECK(records[i].reference.number == 0);
    CHECK(records[i].value == doctest::Approx(expected[i]).epsilon(1e-12));
    // every value matches the literal odds quotient
    CHECK(records[i].value ==
          doctest::Approx(oracle_odds_ratio(kLogPrimes, records[i].reference,
                                            records[i].target))
              .epsilon(1e-10));
  }

  CHECK(ensemble(coeffs(0.0, {0.5})).size() == 1);

  const auto n2 = ensemble(coeffs(0.0, {std::log(2.0), std::log(3.0)}));
  REQUIRE(n2.size() == 3);
  CHECK(n2[0].value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(n2[1].value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(n2[2].value == doctest::Approx(6.0).epsilon(1e-12));

  const auto with_inverse = ensemble(kLogPrimes, true);
  REQUIRE(with_inverse.size() == 8);
  CHECK(with_inverse.back().kind == RatioKind::inverse);

  CHECK_THROWS_AS(ensemble(kLogPrimes, false, 2), CapacityError);
}

TEST_CASE("stream_ensemble matches the materialized ensemble") {
  const auto records = ensemble(kLogPrimes, true);
  std::size_t i = 0;
  stream_ensemble(
      kLogPrimes,
      [&](const OddsRatioRecord& r) {
        REQUIRE(i < records.size());
        CHECK(r.value == records[i].value);
        CHECK(r.target.number == records[i].target.number);
        ++i;
      },
      true);
  CHECK(i == records.size());
}

TEST_CASE("closed-form records equal the oracle for random models") {
  std::mt19937_64 rng(31415);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const Coefficients c = random_coeffs(rng, n);
      for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
        const Event target = event_from_number(n, t);
        for (std::uint64_t r = (t - 1) & t;; r = (r - 1) & t) {
          const Event reference = event_from_number(n, r);
          const double closed =
              odds_ratio_between(c, reference, target).value;
          const double oracle = oracle_odds_ratio(c, reference, target);
          CHECK(std::abs(closed / oracle - 1.0) < 1e-10);
          if (r == 0) {
            break;
          }
        }
      }
    }
  }
}

TEST_CASE("group values are products of their basic factors") {
  std::mt19937_64 rng(27182);
  for (int n = 1; n <= 8; ++n) {
    const Coefficients c = random_coeffs(rng, n);
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
      const SubsetSpec subset = subset_from_event(event_from_number(n, k));
      double product = 1.0;
      for (int m : subset.members) {
        product *= basic_odds_ratio(c, m).value;
      }
      CHECK(group_odds_ratio(c, subset).value ==
            doctest::Approx(product).epsilon(1e-12));
    }
  }
}

TEST_CASE("every reference/target pair of a variable gives the same ratio") {
  std::mt19937_64 rng(16180);
  for (int n = 2; n <= 8; ++n) {
    const Coefficients c = random_coeffs(rng, n);
    for (int v = 1; v <= n; ++v) {
      const auto pairs = reference_target_pairs(subset_from_members(n, {v}));
      const double first =
          odds_ratio_between(c, pairs[0].first, pairs[0].second).value;
      for (const auto& [reference, target] : pairs) {
        CHECK(odds_ratio_between(c, reference, target).value ==
              doctest::Approx(first).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("ensemble rows at single-variable targets equal the basic records") {
  std::mt19937_64 rng(14142);
  for (int n = 1; n <= 8; ++n) {
    const Coefficients c = random_coeffs(rng, n);
    const auto records = ensemble(c);
    for (int v = 1; v <= n; ++v) {
      const std::uint64_t t = std::uint64_t{1} << (n - v);
      const OddsRatioRecord basic = basic_odds_ratio(c, v);
      CHECK(records[t - 1].value == basic.value);  // bitwise equal
      CHECK(records[t - 1].exponent == basic.exponent);
      CHECK(records[t - 1].kind == RatioKind::basic);
    }
  }
}

TEST_CASE("inverse times the full-set group ratio is one") {
  std::mt19937_64 rng(17320);
  for (int n = 1; n <= 8; ++n) {
    const Coefficients c = random_coeffs(rng, n);
    const SubsetSpec full = subset_from_event(all_ones(n));
    CHECK(inverse_odds_ratio(c).value * group_odds_ratio(c, full).value ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("record values never reference the intercept") {
  std::mt19937_64 rng(22360);
  const Coefficients c = random_coeffs(rng, 5);
  Coefficients shifted = c;
  shifted.intercept += 123.456;
  const auto base = ensemble(c, true);
  const auto moved = ensemble(shifted, true);
  REQUIRE(base.size() == moved.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(base[i].value == moved[i].value);
    CHECK(base[i].exponent == moved[i].exponent);
  }
}

TEST_CASE("ensemble_summary reports extremes, spread, and unit counts") {
  const auto records = ensemble(kLogPrimes);
  const EnsembleSummary summary = ensemble_summary(records);
  CHECK(summary.n_records == 7);
  CHECK(summary.max_value == doctest::Approx(30.0).epsilon(1e-12));
  CHECK(summary.argmax.members == std::vector<int>{1, 2, 3});
  CHECK(summary.min_value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(summary.argmin.members == std::vector<int>{1});
  CHECK(summary.n_above_one == 7);
  CHECK(summary.n_equal_one == 0);
  CHECK(summary.n_below_one == 0);
  // geometric mean equals the 7th root of the product of all values
  const double product = 5.0 * 3.0 * 15.0 * 2.0 * 10.0 * 6.0 * 30.0;
  CHECK(summary.geometric_mean ==
        doctest::Approx(std::pow(product, 1.0 / 7.0)).epsilon(1e-12));

  SUBCASE("zero model counts every record as one") {
    const auto flat = ensemble(coeffs(2.0, {0.0, 0.0, 0.0}));
    const EnsembleSummary s = ensemble_summary(flat);
    CHECK(s.n_equal_one == 7);
    CHECK(s.min_value == 1.0);
    CHECK(s.max_value == 1.0);
  }

  SUBCASE("cancelling exponents classify as equal to one") {
    const auto mixed = ensemble(coeffs(0.0, {std::log(2.0), -std::log(2.0)}));
    const EnsembleSummary s = ensemble_summary(mixed);
    CHECK(mixed[2].subset.members == std::vector<int>{1, 2});
    CHECK(std::abs(mixed[2].value - 1.0) <= 1e-12);
    CHECK(s.n_equal_one == 1);
    CHECK(s.n_above_one == 1);
    CHECK(s.n_below_one == 1);
  }

  SUBCASE("empty input is rejected") {
    CHECK_THROWS_AS(ensemble_summary({}), DomainError);
  }
}

TEST_CASE("overflowing exponents raise a range error") {
  Coefficients huge;
  huge.intercept = 0.0;
  huge.betas = {400.0, 400.0};
  CHECK_THROWS_AS(group_odds_ratio(huge, subset_from_members(2, {1, 2})),
                  RangeError);
}
