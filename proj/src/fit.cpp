#include "gor/fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "gor/errors.hpp"

namespace gor {

namespace {

constexpr int kMaxHalvings = 40;
constexpr double kRankThreshold = 1e-10;

double softplus(double eta) {
  // log(1 + exp(eta)) without overflow on either tail
  if (eta > 0.0) {
    return eta + std::log1p(std::exp(-eta));
  }
  return std::log1p(std::exp(eta));
}

double sigmoid(double eta) {
  if (eta >= 0.0) {
    return 1.0 / (1.0 + std::exp(-eta));
  }
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

// Design matrix with the intercept in column 0, response and case weights as
// vectors. One construction point shared by the likelihood, the score, and
// the fitter itself.
struct Design {
  Eigen::MatrixXd X;
  Eigen::VectorXd y;
  Eigen::VectorXd w;

  explicit Design(const Dataset& data) {
    const auto n = static_cast<Eigen::Index>(data.n_rows());
    const Eigen::Index p = data.n_vars + 1;
    X.resize(n, p);
    y.resize(n);
    w.resize(n);
    for (Eigen::Index r = 0; r < n; ++r) {
      X(r, 0) = 1.0;
      const auto& row = data.x[static_cast<std::size_t>(r)];
      for (int j = 0; j < data.n_vars; ++j) {
        X(r, j + 1) = static_cast<double>(row[static_cast<std::size_t>(j)]);
      }
      y(r) = static_cast<double>(data.y[static_cast<std::size_t>(r)]);
      w(r) = data.weighted() ? data.weights[static_cast<std::size_t>(r)] : 1.0;
    }
  }

  double log_likelihood(const Eigen::VectorXd& beta) const {
    const Eigen::VectorXd eta = X * beta;
    // Compensated summation: near the optimum the step improvements sink
    // below the rounding noise of a long naive sum, which would make the
    // monotone line search reject genuinely ascending Newton steps.
    double sum = 0.0;
    double compensation = 0.0;
    for (Eigen::Index r = 0; r < eta.size(); ++r) {
      const double term = w(r) * (y(r) * eta(r) - softplus(eta(r)));
      const double t = sum + term;
      if (std::abs(sum) >= std::abs(term)) {
        compensation += (sum - t) + term;
      } else {
        compensation += (term - t) + sum;
      }
      sum = t;
    }
    return sum + compensation;
  }

  Eigen::VectorXd score(const Eigen::VectorXd& beta) const {
    const Eigen::VectorXd eta = X * beta;
    Eigen::VectorXd resid(eta.size());
    for (Eigen::Index r = 0; r < eta.size(); ++r) {
      resid(r) = w(r) * (y(r) - sigmoid(eta(r)));
    }
    return X.transpose() * resid;
  }

  Eigen::MatrixXd information(const Eigen::VectorXd& beta) const {
    const Eigen::VectorXd eta = X * beta;
    Eigen::VectorXd wt(eta.size());
    for (Eigen::Index r = 0; r < eta.size(); ++r) {
      const double mu = sigmoid(eta(r));
      wt(r) = w(r) * mu * (1.0 - mu);
    }
    return X.transpose() * wt.asDiagonal() * X;
  }
};

std::string term_name(const Dataset& data, Eigen::Index column) {
  if (column == 0) {
    return "(intercept)";
  }
  return data.var_names[static_cast<std::size_t>(column - 1)];
}

void check_rank(const Design& design, const Dataset& data) {
  const Eigen::MatrixXd weighted =
      design.w.array().sqrt().matrix().asDiagonal() * design.X;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(weighted);
  qr.setThreshold(kRankThreshold);
  const Eigen::Index rank = qr.rank();
  if (rank < design.X.cols()) {
    const auto& perm = qr.colsPermutation().indices();
    std::ostringstream msg;
    msg << "design matrix is rank deficient (rank " << rank << " of "
        << design.X.cols() << "); dependent columns:";
    for (Eigen::Index k = rank; k < design.X.cols(); ++k) {
      msg << " " << term_name(data, perm(k));
    }
    throw CollinearityError(msg.str());
  }
}

void check_both_classes(const Dataset& data) {
  bool any_zero = false;
  bool any_one = false;
  for (std::uint8_t v : data.y) {
    (v == 0 ? any_zero : any_one) = true;
  }
  if (!any_zero || !any_one) {
    std::ostringstream msg;
    msg << "response \"" << data.response_name << "\" is constant at "
        << (any_one ? 1 : 0) << "; fitting needs both classes";
    throw DegenerateResponseError(msg.str());
  }
}

std::string format_trajectory(const std::vector<double>& trajectory) {
  std::ostringstream out;
  out << std::setprecision(10);
  const std::size_t n = trajectory.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (n > 8 && i == 4) {
      out << " -> ...";
      i = n - 4;
    }
    if (i > 0) {
      out << " -> ";
    }
    out << trajectory[i];
  }
  return out.str();
}

}  // namespace

double log_likelihood(const Coefficients& coeffs, const Dataset& data) {
  check_coefficients(coeffs);
  check_dataset(data);
  if (coeffs.n_vars() != data.n_vars) {
    throw DomainError("coefficient and dataset dimensions differ");
  }
  Design design(data);
  Eigen::VectorXd beta(data.n_vars + 1);
  beta(0) = coeffs.intercept;
  for (int j = 0; j < data.n_vars; ++j) {
    beta(j + 1) = coeffs.betas[static_cast<std::size_t>(j)];
  }
  return design.log_likelihood(beta);
}

std::vector<double> score(const Coefficients& coeffs, const Dataset& data) {
  check_coefficients(coeffs);
  check_dataset(data);
  if (coeffs.n_vars() != data.n_vars) {
    throw DomainError("coefficient and dataset dimensions differ");
  }
  Design design(data);
  Eigen::VectorXd beta(data.n_vars + 1);
  beta(0) = coeffs.intercept;
  for (int j = 0; j < data.n_vars; ++j) {
    beta(j + 1) = coeffs.betas[static_cast<std::size_t>(j)];
  }
  const Eigen::VectorXd g = design.score(beta);
  return std::vector<double>(g.data(), g.data() + g.size());
}

FitResult fit_logit(const Dataset& data, const FitOptions& options) {
  if (options.max_iterations < 1 || options.score_tolerance <= 0.0 ||
      options.divergence_bound <= 0.0) {
    throw DomainError("fit options must all be positive");
  }
  check_dataset(data);
  check_both_classes(data);

  Design design(data);
  check_rank(design, data);

  const Eigen::Index p = design.X.cols();
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  double ll = design.log_likelihood(beta);

  FitResult result;
  result.trajectory.push_back(ll);

  int steps = 0;
  bool converged = false;
  while (true) {
    const Eigen::VectorXd g = design.score(beta);
    if (g.lpNorm<Eigen::Infinity>() <= options.score_tolerance) {
      converged = true;
      break;
    }
    if (steps >= options.max_iterations) {
      break;
    }

    const Eigen::VectorXd delta = design.information(beta).ldlt().solve(g);

    // Step halving keeps the trajectory non-decreasing up to the likelihood's
    // own rounding noise. When every halved step measures as a decrease the
    // improvement is below that noise, and the full Newton step is taken
    // rather than spinning in place.
    double scale = 1.0;
    Eigen::VectorXd candidate;
    double candidate_ll;
    bool accepted = false;
    for (int h = 0; h <= kMaxHalvings; ++h) {
      candidate = beta + scale * delta;
      candidate_ll = design.log_likelihood(candidate);
      if (candidate_ll >= ll) {
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) {
      const double noise =
          8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(ll));
      candidate = beta + delta;
      candidate_ll = design.log_likelihood(candidate);
      if (candidate_ll < ll - noise) {
        std::ostringstream msg;
        msg << "line search failed after " << kMaxHalvings
            << " halvings at iteration " << (steps + 1)
            << "; log-likelihood trajectory: "
            << format_trajectory(result.trajectory);
        throw ConvergenceError(msg.str());
      }
    }

    beta = candidate;
    ll = candidate_ll;
    ++steps;
    result.trajectory.push_back(ll);

    if (beta.lpNorm<Eigen::Infinity>() > options.divergence_bound) {
      std::ostringstream msg;
      msg << "separation detected: after " << steps
          << " iterations the likelihood is still improving while";
      for (Eigen::Index k = 0; k < p; ++k) {
        if (std::abs(beta(k)) > options.divergence_bound) {
          msg << " |" << term_name(data, k) << "| = " << std::abs(beta(k));
        }
      }
      msg << " exceeds the divergence bound " << options.divergence_bound
          << "; some predictor combination perfectly splits the response";
      throw SeparationError(msg.str());
    }
  }

  if (!converged) {
    const Eigen::VectorXd g = design.score(beta);
    std::ostringstream msg;
    msg << "no convergence after " << steps << " iterations (score max-norm "
        << g.lpNorm<Eigen::Infinity>() << ", tolerance "
        << options.score_tolerance << "); log-likelihood trajectory: "
        << format_trajectory(result.trajectory);
    throw ConvergenceError(msg.str());
  }

  result.coefficients.intercept = beta(0);
  result.coefficients.betas.assign(beta.data() + 1, beta.data() + p);
  result.log_likelihood = ll;
  result.iterations = steps;
  result.converged = true;
  return result;
}

}  // namespace gor
