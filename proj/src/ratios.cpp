#include "gor/ratios.hpp"

#include <cmath>
#include <sstream>

#include "gor/errors.hpp"
#include "gor/events.hpp"
#include "gor/odds.hpp"

namespace gor {

namespace {

// Shared record builder. The exponent accumulates in log space and is
// exponentiated once, so many-variable groups stay stable.
OddsRatioRecord make_record(const Coefficients& coeffs, SubsetSpec subset,
                            Event reference, Event target, RatioKind kind) {
  double exponent = 0.0;
  for (int m : subset.members) {
    exponent += coeffs.betas[static_cast<std::size_t>(m - 1)];
  }
  if (kind == RatioKind::inverse) {
    exponent = -exponent;
  }
  if (std::abs(exponent) > kLogOddsOverflowLimit) {
    std::ostringstream msg;
    msg << "ratio exponent " << exponent << " exceeds the overflow limit of +-"
        << kLogOddsOverflowLimit;
    throw RangeError(msg.str());
  }
  OddsRatioRecord record;
  record.subset = std::move(subset);
  record.reference = std::move(reference);
  record.target = std::move(target);
  record.exponent = exponent;
  record.value = std::exp(exponent);
  record.kind = kind;
  return record;
}

OddsRatioRecord record_for_target(const Coefficients& coeffs, Event target) {
  SubsetSpec subset = subset_from_event(target);
  const RatioKind kind =
      subset.size() == 1 ? RatioKind::basic : RatioKind::group;
  return make_record(coeffs, std::move(subset), all_zeros(coeffs.n_vars()),
                     std::move(target), kind);
}

}  // namespace

OddsRatioRecord basic_odds_ratio(const Coefficients& coeffs, int var_index) {
  check_coefficients(coeffs);
  Event target = event_for_single_variable(coeffs.n_vars(), var_index);
  SubsetSpec subset = subset_from_event(target);
  return make_record(coeffs, std::move(subset), all_zeros(coeffs.n_vars()),
                     std::move(target), RatioKind::basic);
}

OddsRatioRecord odds_ratio_between(const Coefficients& coeffs,
                                   const Event& reference,
                                   const Event& target) {
  check_coefficients(coeffs);
  check_dimensions(coeffs, reference);
  check_dimensions(coeffs, target);
  if (reference.number == target.number) {
    std::ostringstream msg;
    msg << "reference and target must differ (E_r != E_t), both are E_"
        << reference.number;
    throw DomainError(msg.str());
  }

  std::vector<std::uint8_t> diff(static_cast<std::size_t>(target.n_vars), 0);
  std::vector<int> lowered;
  for (int i = 0; i < target.n_vars; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (target.bits[idx] > reference.bits[idx]) {
      diff[idx] = 1;
    } else if (target.bits[idx] < reference.bits[idx]) {
      lowered.push_back(i + 1);
    }
  }
  if (!lowered.empty()) {
    std::ostringstream msg;
    msg << "transition E_" << reference.number << " -> E_" << target.number
        << " lowers";
    for (std::size_t i = 0; i < lowered.size(); ++i) {
      msg << (i == 0 ? " " : ", ") << "x" << lowered[i];
    }
    msg << " from 1 to 0; only pure 0 -> 1 transitions are defined";
    throw DomainError(msg.str());
  }

  SubsetSpec subset = subset_from_event(event_from_bits(diff));
  const RatioKind kind =
      subset.size() == 1 ? RatioKind::basic : RatioKind::group;
  return make_record(coeffs, std::move(subset), reference, target, kind);
}

OddsRatioRecord group_odds_ratio(const Coefficients& coeffs,
                                 const SubsetSpec& subset) {
  check_coefficients(coeffs);
  check_subset(subset);
  if (subset.n_vars != coeffs.n_vars()) {
    std::ostringstream msg;
    msg << "dimension mismatch: coefficients have N=" << coeffs.n_vars()
        << " but subset has N=" << subset.n_vars;
    throw DomainError(msg.str());
  }
  if (subset.empty()) {
    throw DomainError(
        "the empty subset has no group odds ratio; the all-zeros event only "
        "enters through the inverse odds ratio");
  }
  const RatioKind kind =
      subset.size() == 1 ? RatioKind::basic : RatioKind::group;
  return make_record(coeffs, subset, all_zeros(subset.n_vars),
                     indicator_event(subset), kind);
}

OddsRatioRecord inverse_odds_ratio(const Coefficients& coeffs) {
  check_coefficients(coeffs);
  const int n = coeffs.n_vars();
  return make_record(coeffs, subset_from_event(all_ones(n)), all_ones(n),
                     all_zeros(n), RatioKind::inverse);
}

std::vector<OddsRatioRecord> ensemble(const Coefficients& coeffs,
                                      bool include_inverse, int cap) {
  check_coefficients(coeffs);
  if (coeffs.n_vars() > cap) {
    std::ostringstream msg;
    msg << "materializing 2^" << coeffs.n_vars()
        << " - 1 records exceeds the cap of " << cap
        << "; use stream_ensemble";
    throw CapacityError(msg.str());
  }
  std::vector<OddsRatioRecord> records;
  records.reserve((std::size_t{1} << coeffs.n_vars()) - 1 +
                  (include_inverse ? 1 : 0));
  stream_ensemble(
      coeffs, [&records](const OddsRatioRecord& r) { records.push_back(r); },
      include_inverse);
  return records;
}

void stream_ensemble(const Coefficients& coeffs,
                     const std::function<void(const OddsRatioRecord&)>& fn,
                     bool include_inverse) {
  check_coefficients(coeffs);
  const int n = coeffs.n_vars();
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t t = 1; t <= last; ++t) {
    fn(record_for_target(coeffs, event_from_number(n, t)));
  }
  if (include_inverse) {
    fn(inverse_odds_ratio(coeffs));
  }
}

void SummaryAccumulator::add(const OddsRatioRecord& record) {
  if (summary_.n_records == 0 || record.value < summary_.min_value) {
    summary_.min_value = record.value;
    summary_.argmin = record.subset;
  }
  if (summary_.n_records == 0 || record.value > summary_.max_value) {
    summary_.max_value = record.value;
    summary_.argmax = record.subset;
  }
  exponent_sum_ += record.exponent;
  if (std::abs(record.value - 1.0) <= kUnitRatioTolerance) {
    ++summary_.n_equal_one;
  } else if (record.value > 1.0) {
    ++summary_.n_above_one;
  } else {
    ++summary_.n_below_one;
  }
  ++summary_.n_records;
}

EnsembleSummary SummaryAccumulator::finish() const {
  if (summary_.n_records == 0) {
    throw DomainError("cannot summarize an empty record sequence");
  }
  EnsembleSummary summary = summary_;
  summary.geometric_mean =
      std::exp(exponent_sum_ / static_cast<double>(summary.n_records));
  return summary;
}

EnsembleSummary ensemble_summary(const std::vector<OddsRatioRecord>& records) {
  SummaryAccumulator acc;
  for (const OddsRatioRecord& record : records) {
    acc.add(record);
  }
  return acc.finish();
}

}  // namespace gor
