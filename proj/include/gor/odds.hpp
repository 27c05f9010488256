#ifndef GOR_ODDS_HPP
#define GOR_ODDS_HPP

#include "gor/model.hpp"

namespace gor {

// Odds beyond exp(+-700) stop being usable doubles; odds_of_event and
// oracle_odds_ratio refuse log-odds past this magnitude.
inline constexpr double kLogOddsOverflowLimit = 700.0;

// The logit: b0 + sum_i b_i * bit_i, treating states as numbers.
double log_odds(const Coefficients& coeffs, const Event& event);

// exp(log_odds); strictly positive and finite for in-range inputs.
double odds_of_event(const Coefficients& coeffs, const Event& event);

// odds / (1 + odds), evaluated in a numerically stable form and kept strictly
// inside (0,1).
double probability_of_event(const Coefficients& coeffs, const Event& event);

// The odds ratio computed the long way, as a literal quotient of two
// separately exponentiated odds. This is the independent check for the
// closed-form records in ratios.hpp, so it must never take the algebraic
// shortcut of cancelling the intercept.
double oracle_odds_ratio(const Coefficients& coeffs, const Event& reference,
                         const Event& target);

}  // namespace gor

#endif  // GOR_ODDS_HPP
