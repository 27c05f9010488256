// gor: odds-ratio ensembles for (0,1)-coded binary logistic models.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/capacity/validation
// problem, 3 fit failure.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gor/data.hpp"
#include "gor/errors.hpp"
#include "gor/events.hpp"
#include "gor/fit.hpp"
#include "gor/model_io.hpp"
#include "gor/odds.hpp"
#include "gor/ratios.hpp"
#include "gor/report.hpp"
#include "gor/verify.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFitFailure = 3;

int effective_cap() {
  const char* env = std::getenv("GOR_MAX_N");
  if (env == nullptr || *env == '\0') {
    return gor::kDefaultMaterializationCap;
  }
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1 || value > gor::kMaxVars) {
    std::ostringstream msg;
    msg << "GOR_MAX_N must be an integer in 1.." << gor::kMaxVars << ", got \""
        << env << "\"";
    throw gor::DomainError(msg.str());
  }
  return static_cast<int>(value);
}

std::vector<std::string> split_on_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(part);
      part.clear();
    } else {
      part.push_back(c);
    }
  }
  parts.push_back(part);
  return parts;
}

gor::Coefficients parse_coeffs(const std::string& text) {
  const auto parts = split_on_commas(text);
  if (parts.size() < 2) {
    throw gor::DomainError(
        "--coeffs needs at least \"b0,b1\" (intercept plus one slope)");
  }
  std::vector<double> values;
  for (const std::string& part : parts) {
    std::size_t consumed = 0;
    double v = 0.0;
    bool bad = part.empty();
    if (!bad) {
      try {
        v = std::stod(part, &consumed);
      } catch (const std::exception&) {
        bad = true;
      }
    }
    if (bad || consumed != part.size()) {
      throw gor::DomainError("--coeffs entry \"" + part +
                             "\" is not a number");
    }
    values.push_back(v);
  }
  gor::Coefficients coeffs;
  coeffs.intercept = values.front();
  coeffs.betas.assign(values.begin() + 1, values.end());
  gor::check_coefficients(coeffs);
  return coeffs;
}

std::vector<int> parse_subset_members(const std::string& text) {
  std::vector<int> members;
  for (const std::string& part : split_on_commas(text)) {
    std::size_t consumed = 0;
    int v = 0;
    bool bad = part.empty();
    if (!bad) {
      try {
        v = std::stoi(part, &consumed);
      } catch (const std::exception&) {
        bad = true;
      }
    }
    if (bad || consumed != part.size()) {
      throw gor::DomainError("--subset entry \"" + part +
                             "\" is not a variable index");
    }
    members.push_back(v);
  }
  return members;
}

gor::Coefficients model_source(const std::string& model_path,
                               const std::string& coeffs_text) {
  if (model_path.empty() == coeffs_text.empty()) {
    throw gor::DomainError("provide exactly one of --model or --coeffs");
  }
  if (!model_path.empty()) {
    return gor::load_model(model_path).coefficients;
  }
  return parse_coeffs(coeffs_text);
}

const std::map<std::string, gor::ReportFormat> kFormatNames = {
    {"table", gor::ReportFormat::table},
    {"csv", gor::ReportFormat::csv},
    {"json", gor::ReportFormat::json}};

int run_events(int n_vars, gor::ReportFormat format) {
  const auto events = gor::enumerate_events(n_vars, effective_cap());
  gor::render_events(std::cout, events, format);
  return 0;
}

int run_fit(const std::string& data_path, const std::string& response,
            const std::optional<std::string>& weights,
            const std::string& out_path, const gor::FitOptions& options) {
  const gor::Dataset data = gor::load_csv(data_path, response, weights);
  const gor::FitResult fit = gor::fit_logit(data, options);
  gor::save_model(gor::model_from_fit(fit, data.var_names), out_path);

  std::cout << (fit.converged ? "converged" : "stopped") << " after "
            << fit.iterations << " iterations; log-likelihood = "
            << gor::format_fixed(fit.log_likelihood) << "\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"term", "estimate", "exp(estimate)", "role"});
  rows.push_back({"(intercept)", gor::format_fixed(fit.coefficients.intercept),
                  gor::format_fixed(std::exp(fit.coefficients.intercept)),
                  "baseline odds"});
  for (int i = 0; i < data.n_vars; ++i) {
    const double beta = fit.coefficients.betas[static_cast<std::size_t>(i)];
    rows.push_back({data.var_names[static_cast<std::size_t>(i)],
                    gor::format_fixed(beta), gor::format_fixed(std::exp(beta)),
                    "basic odds ratio"});
  }
  gor::render_text_table(std::cout, rows);
  std::cerr << "model written to " << out_path << "\n";
  return 0;
}

int run_ratios(const gor::Coefficients& coeffs, const std::string& subset_text,
               std::optional<std::uint64_t> reference,
               std::optional<std::uint64_t> target, bool include_inverse,
               bool stream, gor::ReportFormat format) {
  const int n = coeffs.n_vars();
  const bool has_subset = !subset_text.empty();
  const bool has_pair = reference.has_value() || target.has_value();
  if (has_pair && (!reference.has_value() || !target.has_value())) {
    throw gor::DomainError("--reference and --target must be given together");
  }
  if (has_subset && has_pair) {
    throw gor::DomainError("use --subset or --reference/--target, not both");
  }

  if (has_subset || has_pair) {
    if (include_inverse || stream) {
      throw gor::DomainError(
          "--include-inverse and --stream apply only to the full ensemble");
    }
    gor::OddsRatioRecord record =
        has_subset
            ? gor::group_odds_ratio(
                  coeffs,
                  gor::subset_from_members(n, parse_subset_members(subset_text)))
            : gor::odds_ratio_between(coeffs,
                                      gor::event_from_number(n, *reference),
                                      gor::event_from_number(n, *target));
    gor::render_records(std::cout, {record}, format, nullptr);
    return 0;
  }

  if (stream) {
    if (format != gor::ReportFormat::csv) {
      throw gor::DomainError("--stream emits csv; use --format csv");
    }
    gor::CsvRecordWriter writer(std::cout);
    gor::stream_ensemble(
        coeffs, [&writer](const gor::OddsRatioRecord& r) { writer.add(r); },
        include_inverse);
    return 0;
  }

  auto records = gor::ensemble(coeffs, false, effective_cap());
  const gor::EnsembleSummary summary = gor::ensemble_summary(records);
  if (include_inverse) {
    records.push_back(gor::inverse_odds_ratio(coeffs));
  }
  gor::render_records(std::cout, records, format,
                      format == gor::ReportFormat::csv ? nullptr : &summary);
  return 0;
}

int run_verify(const gor::Coefficients& coeffs, int seeds,
               double inject_error) {
  gor::VerifyOptions options;
  options.seeds = seeds;
  options.inject_error = inject_error;
  const gor::VerifyReport report = gor::verify_model(coeffs, options);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"law", "checks", "worst_rel_err", "tolerance", "result"});
  char buf[32];
  for (const gor::LawResult& law : report.laws) {
    std::snprintf(buf, sizeof(buf), "%.3g", law.worst_rel_err);
    std::string worst = buf;
    std::snprintf(buf, sizeof(buf), "%g", law.tolerance);
    rows.push_back({law.law, std::to_string(law.checks), worst, buf,
                    law.passed ? "pass" : "FAIL"});
  }
  gor::render_text_table(std::cout, rows);
  std::cout << '\n';

  if (report.all_passed) {
    char worst[32];
    std::snprintf(worst, sizeof(worst), "%.3g", report.worst_rel_err);
    std::cout << "all laws passed; worst relative error " << worst << "\n";
    return 0;
  }
  for (const gor::LawResult& law : report.laws) {
    if (!law.passed) {
      std::cout << "law \"" << law.law << "\" FAILED\n  counterexample: "
                << law.counterexample << "\n";
    }
  }
  return kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"odds-ratio ensembles for (0,1)-coded binary logistic models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gor 0.1.0");

  // events
  auto* events_cmd =
      app.add_subcommand("events", "enumerate the 2^N events in nu order");
  int events_n_vars = 0;
  gor::ReportFormat events_format = gor::ReportFormat::table;
  events_cmd->add_option("--n-vars", events_n_vars, "number of variables N")
      ->required();
  events_cmd->add_option("--format", events_format, "table, csv, or json")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  // fit
  auto* fit_cmd = app.add_subcommand(
      "fit", "fit a logit model to a (0,1)-coded CSV dataset");
  std::string fit_data, fit_response, fit_weights, fit_out;
  gor::FitOptions fit_options;
  bool fit_error_json = false;
  fit_cmd->add_option("--data", fit_data, "CSV file path")->required();
  fit_cmd->add_option("--response", fit_response, "response column name")
      ->required();
  fit_cmd->add_option("--weights", fit_weights,
                      "optional count/weight column name");
  fit_cmd->add_option("--out", fit_out, "output model JSON path")->required();
  fit_cmd->add_option("--max-iterations", fit_options.max_iterations,
                      "Newton iteration limit");
  fit_cmd->add_option("--score-tolerance", fit_options.score_tolerance,
                      "max-norm convergence tolerance on the score");
  fit_cmd->add_option("--divergence-bound", fit_options.divergence_bound,
                      "|coefficient| bound for separation detection");
  fit_cmd->add_flag("--error-json", fit_error_json,
                    "print fit failures as machine-readable JSON");

  // ratios
  auto* ratios_cmd = app.add_subcommand(
      "ratios", "compute the odds-ratio ensemble, or one selected record");
  std::string ratios_model, ratios_coeffs, ratios_subset;
  std::optional<std::uint64_t> ratios_reference, ratios_target;
  bool ratios_include_inverse = false;
  bool ratios_stream = false;
  gor::ReportFormat ratios_format = gor::ReportFormat::table;
  ratios_cmd->add_option("--model", ratios_model, "model JSON path");
  ratios_cmd->add_option("--coeffs", ratios_coeffs,
                         "inline coefficients \"b0,b1,...,bN\"");
  ratios_cmd->add_option("--subset", ratios_subset,
                         "restrict to one subset, e.g. \"2,3\"");
  ratios_cmd->add_option("--reference", ratios_reference,
                         "reference event number");
  ratios_cmd->add_option("--target", ratios_target, "target event number");
  ratios_cmd->add_flag("--include-inverse", ratios_include_inverse,
                       "append the all-ones -> all-zeros inverse record");
  ratios_cmd->add_flag("--stream", ratios_stream,
                       "stream csv rows without materializing the ensemble");
  ratios_cmd->add_option("--format", ratios_format, "table, csv, or json")
      ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "check the ratio calculus laws against the odds oracle");
  std::string verify_model_path, verify_coeffs;
  int verify_seeds = 0;
  double verify_inject = 0.0;
  verify_cmd->add_option("--model", verify_model_path, "model JSON path");
  verify_cmd->add_option("--coeffs", verify_coeffs,
                         "inline coefficients \"b0,b1,...,bN\"");
  verify_cmd->add_option("--seeds", verify_seeds,
                         "also scan this many random coefficient vectors");
  verify_cmd->add_option("--inject-error", verify_inject,
                         "perturb closed-form values (harness self-test)");

  try {
    app.parse(argc, argv);
    if (*events_cmd) {
      return run_events(events_n_vars, events_format);
    }
    if (*fit_cmd) {
      try {
        return run_fit(fit_data, fit_response,
                       fit_weights.empty()
                           ? std::nullopt
                           : std::make_optional(fit_weights),
                       fit_out, fit_options);
      } catch (const gor::FitError& e) {
        if (fit_error_json) {
          std::string kind = "fit";
          if (dynamic_cast<const gor::SeparationError*>(&e)) {
            kind = "separation";
          } else if (dynamic_cast<const gor::ConvergenceError*>(&e)) {
            kind = "convergence";
          } else if (dynamic_cast<const gor::CollinearityError*>(&e)) {
            kind = "collinearity";
          }
          nlohmann::json j;
          j["error"] = {{"kind", kind}, {"message", e.what()}};
          std::cout << j.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitFitFailure;
      }
    }
    if (*ratios_cmd) {
      if (ratios_stream && ratios_cmd->count("--format") == 0) {
        ratios_format = gor::ReportFormat::csv;
      }
      return run_ratios(model_source(ratios_model, ratios_coeffs),
                        ratios_subset, ratios_reference, ratios_target,
                        ratios_include_inverse, ratios_stream, ratios_format);
    }
    if (*verify_cmd) {
      return run_verify(model_source(verify_model_path, verify_coeffs),
                        verify_seeds, verify_inject);
    }
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
