#include "gor/odds.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gor/errors.hpp"

namespace gor {

namespace {

double checked_odds(double eta) {
  if (std::abs(eta) > kLogOddsOverflowLimit) {
    std::ostringstream msg;
    msg << "log-odds " << eta << " exceeds the overflow limit of +-"
        << kLogOddsOverflowLimit;
    throw RangeError(msg.str());
  }
  return std::exp(eta);
}

}  // namespace

double log_odds(const Coefficients& coeffs, const Event& event) {
  check_dimensions(coeffs, event);
  double eta = coeffs.intercept;
  for (int i = 0; i < event.n_vars; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    eta += coeffs.betas[idx] * static_cast<double>(event.bits[idx]);
  }
  return eta;
}

double odds_of_event(const Coefficients& coeffs, const Event& event) {
  return checked_odds(log_odds(coeffs, event));
}

double probability_of_event(const Coefficients& coeffs, const Event& event) {
  const double eta = log_odds(coeffs, event);
  double p;
  if (eta >= 0.0) {
    p = 1.0 / (1.0 + std::exp(-eta));
  } else {
    const double e = std::exp(eta);
    p = e / (1.0 + e);
  }
  // Keep the open interval even where the closest double would round onto an
  // endpoint.
  const double lo = std::numeric_limits<double>::min();
  const double hi = std::nextafter(1.0, 0.0);
  return std::min(std::max(p, lo), hi);
}

double oracle_odds_ratio(const Coefficients& coeffs, const Event& reference,
                         const Event& target) {
  check_dimensions(coeffs, reference);
  check_dimensions(coeffs, target);
  if (reference.number == target.number) {
    std::ostringstream msg;
    msg << "reference and target must differ (E_r != E_t), both are E_"
        << reference.number;
    throw DomainError(msg.str());
  }
  // Two full exponentials and a division, on purpose: no cancellation of b0,
  // no shared log-space arithmetic with the closed-form records.
  const double odds_target = checked_odds(log_odds(coeffs, target));
  const double odds_reference = checked_odds(log_odds(coeffs, reference));
  return odds_target / odds_reference;
}

}  // namespace gor
