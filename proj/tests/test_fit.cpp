#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "gor/data.hpp"
#include "gor/errors.hpp"
#include "gor/fit.hpp"

using namespace gor;

namespace {

// The saturated 2x2 table: 30 of 50 responders at x=1, 10 of 50 at x=0.
// Its maximum-likelihood slope is the log cross-product ratio
// log((30*40)/(20*10)) = log 6 and the intercept is log(10/40).
Dataset two_by_two() {
  Dataset data;
  data.n_vars = 1;
  data.var_names = {"x1"};
  data.response_name = "y";
  data.x = {{1}, {1}, {0}, {0}};
  data.y = {1, 0, 1, 0};
  data.weights = {30.0, 20.0, 10.0, 40.0};
  return data;
}

Dataset expand(const Dataset& grouped) {
  Dataset data;
  data.n_vars = grouped.n_vars;
  data.var_names = grouped.var_names;
  data.response_name = grouped.response_name;
  for (std::size_t r = 0; r < grouped.n_rows(); ++r) {
    const auto copies = static_cast<std::size_t>(grouped.weights[r]);
    for (std::size_t k = 0; k < copies; ++k) {
      data.x.push_back(grouped.x[r]);
      data.y.push_back(grouped.y[r]);
    }
  }
  return data;
}

Coefficients coeffs(double intercept, std::vector<double> betas) {
  Coefficients c;
  c.intercept = intercept;
  c.betas = std::move(betas);
  return c;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) {
    m = std::max(m, std::abs(x));
  }
  return m;
}

}  // namespace

TEST_CASE("the saturated 2x2 table recovers the cross-product ratio") {
  const FitResult fit = fit_logit(two_by_two());
  CHECK(fit.converged);
  CHECK(std::abs(fit.coefficients.betas[0] - std::log(6.0)) < 1e-6);
  CHECK(std::abs(fit.coefficients.intercept - std::log(0.25)) < 1e-6);
  CHECK(fit.iterations > 0);
  CHECK(fit.iterations <= 50);
}

TEST_CASE("balanced null data lands on a zero slope immediately") {
  Dataset data;
  data.n_vars = 1;
  data.var_names = {"x1"};
  data.response_name = "y";
  data.x = {{0}, {0}, {1}, {1}};
  data.y = {1, 0, 1, 0};
  data.weights = {10.0, 10.0, 10.0, 10.0};
  const FitResult fit = fit_logit(data);
  CHECK(fit.converged);
  CHECK(fit.coefficients.betas[0] == 0.0);
  CHECK(fit.coefficients.intercept == 0.0);
  CHECK(fit.iterations == 0);
}

TEST_CASE("grouped and expanded data agree per coefficient") {
  const FitResult grouped = fit_logit(two_by_two());
  const FitResult expanded = fit_logit(expand(two_by_two()));
  CHECK(std::abs(grouped.coefficients.intercept -
                 expanded.coefficients.intercept) < 1e-8);
  CHECK(std::abs(grouped.coefficients.betas[0] -
                 expanded.coefficients.betas[0]) < 1e-8);
  CHECK(grouped.log_likelihood ==
        doctest::Approx(expanded.log_likelihood).epsilon(1e-10));
}

TEST_CASE("the score vanishes at the solution and the trajectory ascends") {
  const Coefficients truth = coeffs(-0.4, {0.8, -1.1, 0.3});
  const Dataset data = generate_synthetic(truth, 4000, 77);
  const FitOptions options;
  const FitResult fit = fit_logit(data, options);
  CHECK(fit.converged);
  CHECK(max_abs(score(fit.coefficients, data)) <= options.score_tolerance);
  for (std::size_t i = 1; i < fit.trajectory.size(); ++i) {
    // non-decreasing up to the likelihood's own rounding noise
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() *
                         (1.0 + std::abs(fit.trajectory[i - 1]));
    CHECK(fit.trajectory[i] >= fit.trajectory[i - 1] - noise);
  }
  CHECK(fit.log_likelihood == fit.trajectory.back());
  CHECK(fit.log_likelihood == log_likelihood(fit.coefficients, data));
}

TEST_CASE("perfectly separated data raise a separation error") {
  Dataset data;
  data.n_vars = 1;
  data.var_names = {"x1"};
  data.response_name = "y";
  for (int k = 0; k < 20; ++k) {
    data.x.push_back({static_cast<std::uint8_t>(k % 2)});
    data.y.push_back(static_cast<std::uint8_t>(k % 2));
  }
  CHECK_THROWS_WITH_AS(fit_logit(data), doctest::Contains("separation"),
                       SeparationError);
}

TEST_CASE("duplicated predictors raise a collinearity error naming them") {
  Dataset data;
  data.n_vars = 2;
  data.var_names = {"x1", "x2"};
  data.response_name = "y";
  data.x = {{0, 0}, {0, 0}, {1, 1}, {1, 1}};
  data.y = {0, 1, 1, 0};
  data.weights = {5.0, 5.0, 6.0, 4.0};
  CHECK_THROWS_WITH_AS(fit_logit(data), doctest::Contains("rank deficient"),
                       CollinearityError);
}

TEST_CASE("a constant explanatory column is reported as collinear") {
  Dataset data;
  data.n_vars = 2;
  data.var_names = {"x1", "flat"};
  data.response_name = "y";
  data.x = {{0, 1}, {0, 1}, {1, 1}, {1, 1}};
  data.y = {0, 1, 1, 0};
  CHECK_THROWS_WITH_AS(fit_logit(data), doctest::Contains("flat"),
                       CollinearityError);
}

TEST_CASE("an exhausted iteration budget raises a convergence error") {
  FitOptions options;
  options.max_iterations = 1;
  CHECK_THROWS_WITH_AS(fit_logit(two_by_two(), options),
                       doctest::Contains("trajectory"), ConvergenceError);
}

TEST_CASE("single-class responses are rejected before fitting") {
  Dataset data;
  data.n_vars = 1;
  data.var_names = {"x1"};
  data.response_name = "y";
  data.x = {{0}, {1}};
  data.y = {1, 1};
  CHECK_THROWS_AS(fit_logit(data), DegenerateResponseError);
}

TEST_CASE("fit options must be positive") {
  FitOptions options;
  options.score_tolerance = 0.0;
  CHECK_THROWS_AS(fit_logit(two_by_two(), options), DomainError);
  options = {};
  options.max_iterations = 0;
  CHECK_THROWS_AS(fit_logit(two_by_two(), options), DomainError);
}

TEST_CASE("the analytic score matches central finite differences") {
  // Independent derivative oracle: (ll(b + h e_k) - ll(b - h e_k)) / 2h.
  std::mt19937_64 rng(8675309);
  std::uniform_real_distribution<double> beta_range(-1.5, 1.5);
  std::uniform_int_distribution<int> n_range(1, 4);
  std::uniform_int_distribution<int> rows_range(8, 40);
  std::uniform_int_distribution<int> bit(0, 1);
  const double h = 1e-5;

  for (int rep = 0; rep < 20; ++rep) {
    const int n = n_range(rng);
    Dataset data;
    data.n_vars = n;
    for (int i = 1; i <= n; ++i) {
      data.var_names.push_back("x" + std::to_string(i));
    }
    data.response_name = "y";
    const int rows = rows_range(rng);
    for (int r = 0; r < rows; ++r) {
      std::vector<std::uint8_t> x;
      for (int i = 0; i < n; ++i) {
        x.push_back(static_cast<std::uint8_t>(bit(rng)));
      }
      data.x.push_back(std::move(x));
      data.y.push_back(static_cast<std::uint8_t>(bit(rng)));
    }

    Coefficients beta = coeffs(beta_range(rng), {});
    for (int i = 0; i < n; ++i) {
      beta.betas.push_back(beta_range(rng));
    }

    const std::vector<double> analytic = score(beta, data);
    for (int k = 0; k <= n; ++k) {
      Coefficients up = beta;
      Coefficients down = beta;
      if (k == 0) {
        up.intercept += h;
        down.intercept -= h;
      } else {
        up.betas[static_cast<std::size_t>(k - 1)] += h;
        down.betas[static_cast<std::size_t>(k - 1)] -= h;
      }
      const double fd =
          (log_likelihood(up, data) - log_likelihood(down, data)) / (2.0 * h);
      const double scale = std::max(1.0, std::abs(analytic[static_cast<std::size_t>(k)]));
      CHECK(std::abs(fd - analytic[static_cast<std::size_t>(k)]) <=
            1e-4 * scale);
    }
  }
}
