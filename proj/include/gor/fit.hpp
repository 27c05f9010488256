#ifndef GOR_FIT_HPP
#define GOR_FIT_HPP

#include <vector>

#include "gor/model.hpp"

namespace gor {

struct FitOptions {
  int max_iterations = 50;
  double score_tolerance = 1e-8;
  // Any |coefficient| past this bound before convergence is treated as
  // complete or quasi-complete separation.
  double divergence_bound = 15.0;
};

struct FitResult {
  Coefficients coefficients;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool converged = false;
  // Log-likelihood after each accepted step, starting at the zero
  // initializer. Non-decreasing by construction.
  std::vector<double> trajectory;
};

// Maximum-likelihood logit fit for P(y=1) = logistic(b0 + b . x) by
// Newton-Raphson with step halving. Deterministic: zero initialization, no
// randomness. Throws SeparationError, CollinearityError, ConvergenceError,
// or DegenerateResponseError when the data admit no usable estimate.
FitResult fit_logit(const Dataset& data, const FitOptions& options = {});

// Weighted Bernoulli log-likelihood of the dataset under the coefficients.
double log_likelihood(const Coefficients& coeffs, const Dataset& data);

// Gradient of the log-likelihood, intercept component first (size N + 1).
std::vector<double> score(const Coefficients& coeffs, const Dataset& data);

}  // namespace gor

#endif  // GOR_FIT_HPP
