#include "gor/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gor/errors.hpp"
#include "gor/events.hpp"
#include "gor/odds.hpp"
#include "gor/ratios.hpp"
#include "gor/report.hpp"

namespace gor {

namespace {

std::string describe_model(const Coefficients& coeffs) {
  std::ostringstream out;
  out << "intercept=" << format_full(coeffs.intercept) << " betas=[";
  for (std::size_t i = 0; i < coeffs.betas.size(); ++i) {
    out << (i ? "," : "") << format_full(coeffs.betas[i]);
  }
  out << "]";
  return out.str();
}

std::string describe_pair(const Event& reference, const Event& target) {
  return "reference=" + event_label(reference) + " " + bits_label(reference) +
         " target=" + event_label(target) + " " + bits_label(target);
}

class LawChecker {
public:
  LawChecker(std::string law, double tolerance)
      : result_{std::move(law), 0, 0.0, tolerance, true, ""} {}

  void check(double lhs, double rhs, const std::string& context) {
    ++result_.checks;
    const double rel =
        rhs == 0.0 ? std::abs(lhs - rhs) : std::abs(lhs / rhs - 1.0);
    if (rel > result_.worst_rel_err) {
      result_.worst_rel_err = rel;
    }
    if (rel > result_.tolerance && result_.passed) {
      result_.passed = false;
      std::ostringstream out;
      out << context << " lhs=" << format_full(lhs)
          << " rhs=" << format_full(rhs) << " rel_err=" << rel
          << " tolerance=" << result_.tolerance;
      result_.counterexample = out.str();
    }
  }

  // Exact comparisons report any difference as a failure.
  void check_exact(double lhs, double rhs, const std::string& context) {
    ++result_.checks;
    if (lhs != rhs && result_.passed) {
      result_.passed = false;
      std::ostringstream out;
      out << context << " lhs=" << format_full(lhs)
          << " rhs=" << format_full(rhs) << " (exact equality required)";
      result_.counterexample = out.str();
      result_.worst_rel_err =
          rhs == 0.0 ? std::abs(lhs - rhs) : std::abs(lhs / rhs - 1.0);
    }
  }

  LawResult take() { return std::move(result_); }

private:
  LawResult result_;
};

// Walks every pure 0 -> 1 pair: all (r, t) with r a proper submask of t.
template <typename Fn>
void for_each_transition_pair(int n, Fn&& fn) {
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t t = 1; t <= last; ++t) {
    const Event target = event_from_number(n, t);
    for (std::uint64_t r = (t - 1) & t;; r = (r - 1) & t) {
      fn(event_from_number(n, r), target);
      if (r == 0) {
        break;
      }
    }
  }
}

void scan_model(const Coefficients& coeffs, const VerifyOptions& options,
                LawChecker& oracle_law, LawChecker& product_law,
                LawChecker& context_free_law, LawChecker& subsumption_law,
                LawChecker& inverse_law, LawChecker& intercept_law) {
  const int n = coeffs.n_vars();
  const std::string model = describe_model(coeffs);

  // Oracle equivalence over every valid pair, with the optional self-test
  // perturbation applied to the closed-form side.
  for_each_transition_pair(n, [&](const Event& reference, const Event& target) {
    const double closed = odds_ratio_between(coeffs, reference, target).value *
                          (1.0 + options.inject_error);
    const double oracle = oracle_odds_ratio(coeffs, reference, target);
    oracle_law.check(closed, oracle,
                     model + " " + describe_pair(reference, target));
  });

  // Product law: each group value against the product of its basic factors.
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t k = 1; k <= last; ++k) {
    const SubsetSpec subset = subset_from_event(event_from_number(n, k));
    double product = 1.0;
    for (int m : subset.members) {
      product *= basic_odds_ratio(coeffs, m).value;
    }
    product_law.check(group_odds_ratio(coeffs, subset).value, product,
                      model + " subset=" + subset_label(subset));
  }

  // Context-free law: every pair of a single variable yields one value.
  for (int v = 1; v <= n; ++v) {
    const SubsetSpec singleton = subset_from_members(n, {v});
    const auto pairs = reference_target_pairs(singleton, kMaxVerifyVars);
    const double first =
        odds_ratio_between(coeffs, pairs.front().first, pairs.front().second)
            .value;
    for (const auto& [reference, target] : pairs) {
      context_free_law.check(
          odds_ratio_between(coeffs, reference, target).value, first,
          model + " variable=x" + std::to_string(v) + " " +
              describe_pair(reference, target));
    }
  }

  // Subsumption: ensemble rows at single-variable targets match the basic
  // records without any float slack.
  const auto records = ensemble(coeffs, false, kMaxVerifyVars);
  for (int v = 1; v <= n; ++v) {
    const std::uint64_t target_number = std::uint64_t{1} << (n - v);
    const OddsRatioRecord& row = records[target_number - 1];
    const OddsRatioRecord basic = basic_odds_ratio(coeffs, v);
    subsumption_law.check_exact(row.value, basic.value,
                                model + " variable=x" + std::to_string(v));
  }

  // Inverse law.
  const SubsetSpec full = subset_from_event(all_ones(n));
  inverse_law.check(
      inverse_odds_ratio(coeffs).value * group_odds_ratio(coeffs, full).value,
      1.0, model);

  // Intercept invariance: shifted intercepts leave closed-form values
  // identical; the oracle tracks within its own tolerance.
  for (double shift : {5.0, -3.0}) {
    Coefficients shifted = coeffs;
    shifted.intercept += shift;
    const auto shifted_records = ensemble(shifted, false, kMaxVerifyVars);
    for (std::size_t i = 0; i < records.size(); ++i) {
      intercept_law.check_exact(shifted_records[i].value, records[i].value,
                                model + " shift=" + format_full(shift) +
                                    " target=" +
                                    event_label(records[i].target));
    }
    for (int v = 1; v <= n; ++v) {
      const Event target = event_for_single_variable(n, v);
      intercept_law.check(
          oracle_odds_ratio(shifted, all_zeros(n), target),
          oracle_odds_ratio(coeffs, all_zeros(n), target),
          model + " shift=" + format_full(shift) + " oracle variable=x" +
              std::to_string(v));
    }
  }
}

}  // namespace

VerifyReport verify_model(const Coefficients& coeffs,
                          const VerifyOptions& options) {
  check_coefficients(coeffs);
  if (coeffs.n_vars() > kMaxVerifyVars) {
    std::ostringstream msg;
    msg << "exhaustive verification supports N <= " << kMaxVerifyVars
        << ", got N = " << coeffs.n_vars();
    throw DomainError(msg.str());
  }
  if (options.seeds < 0) {
    throw DomainError("seeds must be non-negative");
  }

  LawChecker oracle_law("oracle equivalence", 1e-10);
  LawChecker product_law("product law", 1e-12);
  LawChecker context_free_law("context-free law", 1e-12);
  LawChecker subsumption_law("subsumption", 0.0);
  LawChecker inverse_law("inverse law", 1e-12);
  LawChecker intercept_law("intercept invariance", 1e-10);

  scan_model(coeffs, options, oracle_law, product_law, context_free_law,
             subsumption_law, inverse_law, intercept_law);

  for (int s = 1; s <= options.seeds; ++s) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(s));
    Coefficients random;
    const auto unit = [&rng] {
      return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    random.intercept = 2.0 * unit() - 1.0;
    random.betas.resize(coeffs.betas.size());
    for (double& b : random.betas) {
      b = 4.0 * unit() - 2.0;
    }
    scan_model(random, options, oracle_law, product_law, context_free_law,
               subsumption_law, inverse_law, intercept_law);
  }

  VerifyReport report;
  report.laws.push_back(oracle_law.take());
  report.laws.push_back(product_law.take());
  report.laws.push_back(context_free_law.take());
  report.laws.push_back(subsumption_law.take());
  report.laws.push_back(inverse_law.take());
  report.laws.push_back(intercept_law.take());
  for (const LawResult& law : report.laws) {
    report.all_passed = report.all_passed && law.passed;
    report.worst_rel_err = std::max(report.worst_rel_err, law.worst_rel_err);
  }
  return report;
}

}  // namespace gor
