#ifndef GOR_RATIOS_HPP
#define GOR_RATIOS_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "gor/model.hpp"

namespace gor {

// Ratio values within this relative distance of 1 count as "equal to one" in
// summaries. Pure floating-point arithmetic feeds this layer, so the
// tolerance stays at machine-noise scale.
inline constexpr double kUnitRatioTolerance = 1e-12;

// The odds ratio of a single variable's 0 -> 1 state change: exp(b_n),
// recorded against the all-zeros reference and the event that singles the
// variable out.
OddsRatioRecord basic_odds_ratio(const Coefficients& coeffs, int var_index);

// The odds ratio between two events, computed in closed form from the
// coefficient sum over the changed positions. Only pure 0 -> 1 transitions
// are accepted: every bit either holds its state or rises.
OddsRatioRecord odds_ratio_between(const Coefficients& coeffs,
                                   const Event& reference, const Event& target);

// The multivariable odds ratio for a non-empty subset changing 0 -> 1
// simultaneously, referenced to the all-zeros event: exp(sum of member betas).
OddsRatioRecord group_odds_ratio(const Coefficients& coeffs,
                                 const SubsetSpec& subset);

// The all-variables 1 -> 0 transition: all-ones reference, all-zeros target,
// value exp(-(b_1 + ... + b_N)).
OddsRatioRecord inverse_odds_ratio(const Coefficients& coeffs);

// The full ensemble: one record per non-empty subset, ordered by target
// event number 1..2^N-1, every record referenced to the all-zeros event.
// Optionally appends the inverse record at the end.
std::vector<OddsRatioRecord> ensemble(const Coefficients& coeffs,
                                      bool include_inverse = false,
                                      int cap = kDefaultMaterializationCap);

// Streaming form of ensemble: invokes fn once per record in the same order,
// never holding more than one record. No materialization cap.
void stream_ensemble(const Coefficients& coeffs,
                     const std::function<void(const OddsRatioRecord&)>& fn,
                     bool include_inverse = false);

struct EnsembleSummary {
  std::size_t n_records = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  double geometric_mean = 0.0;
  SubsetSpec argmin;
  SubsetSpec argmax;
  std::size_t n_above_one = 0;
  std::size_t n_equal_one = 0;
  std::size_t n_below_one = 0;
};

// Incremental summary so streaming reports never buffer records. Ties for
// min/max keep the earliest record.
class SummaryAccumulator {
public:
  void add(const OddsRatioRecord& record);
  bool empty() const { return summary_.n_records == 0; }
  EnsembleSummary finish() const;

private:
  EnsembleSummary summary_;
  double exponent_sum_ = 0.0;
};

EnsembleSummary ensemble_summary(const std::vector<OddsRatioRecord>& records);

}  // namespace gor

#endif  // GOR_RATIOS_HPP
