#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "gor/data.hpp"
#include "gor/errors.hpp"
#include "gor/events.hpp"
#include "gor/fit.hpp"
#include "gor/model.hpp"
#include "gor/model_io.hpp"
#include "gor/odds.hpp"
#include "gor/ratios.hpp"
#include "gor/report.hpp"
#include "gor/verify.hpp"

namespace py = pybind11;

namespace {

gor::Coefficients make_coefficients(double intercept,
                                    std::vector<double> betas) {
  gor::Coefficients c;
  c.intercept = intercept;
  c.betas = std::move(betas);
  gor::check_coefficients(c);
  return c;
}

gor::Dataset make_dataset(std::vector<std::vector<std::uint8_t>> x,
                          std::vector<std::uint8_t> y,
                          std::optional<std::vector<double>> weights,
                          std::optional<std::vector<std::string>> var_names,
                          std::string response_name) {
  gor::Dataset data;
  data.n_vars = x.empty() ? 0 : static_cast<int>(x.front().size());
  if (var_names) {
    data.var_names = std::move(*var_names);
  } else {
    for (int i = 1; i <= data.n_vars; ++i) {
      data.var_names.push_back("x" + std::to_string(i));
    }
  }
  data.response_name = std::move(response_name);
  data.x = std::move(x);
  data.y = std::move(y);
  if (weights) {
    data.weights = std::move(*weights);
  }
  gor::check_dataset(data);
  return data;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "odds-ratio ensembles for (0,1)-coded binary logistic models";

  // exceptions
  auto error = py::register_exception<gor::Error>(m, "Error");
  py::register_exception<gor::DomainError>(m, "DomainError", error);
  py::register_exception<gor::CapacityError>(m, "CapacityError", error);
  py::register_exception<gor::RangeError>(m, "RangeError", error);
  py::register_exception<gor::ValidationError>(m, "ValidationError", error);
  auto schema_error =
      py::register_exception<gor::SchemaError>(m, "SchemaError", error);
  py::register_exception<gor::DegenerateResponseError>(
      m, "DegenerateResponseError", schema_error);
  auto fit_error = py::register_exception<gor::FitError>(m, "FitError", error);
  py::register_exception<gor::ConvergenceError>(m, "ConvergenceError",
                                                fit_error);
  py::register_exception<gor::SeparationError>(m, "SeparationError", fit_error);
  py::register_exception<gor::CollinearityError>(m, "CollinearityError",
                                                 fit_error);

  // types
  py::class_<gor::Event>(m, "Event")
      .def_readonly("n_vars", &gor::Event::n_vars)
      .def_readonly("bits", &gor::Event::bits)
      .def_readonly("number", &gor::Event::number)
      .def("__eq__", [](const gor::Event& a, const gor::Event& b) { return a == b; })
      .def("__repr__", [](const gor::Event& e) {
        return gor::event_label(e) + " " + gor::bits_label(e);
      });

  py::class_<gor::Coefficients>(m, "Coefficients")
      .def(py::init(&make_coefficients), py::arg("intercept"),
           py::arg("betas"))
      .def_readonly("intercept", &gor::Coefficients::intercept)
      .def_readonly("betas", &gor::Coefficients::betas)
      .def_property_readonly("n_vars", &gor::Coefficients::n_vars);

  py::class_<gor::SubsetSpec>(m, "SubsetSpec")
      .def_readonly("n_vars", &gor::SubsetSpec::n_vars)
      .def_readonly("members", &gor::SubsetSpec::members)
      .def_readonly("number", &gor::SubsetSpec::number)
      .def("__repr__", [](const gor::SubsetSpec& s) {
        return gor::subset_name(s) + " = " + gor::subset_label(s);
      });

  py::enum_<gor::RatioKind>(m, "RatioKind")
      .value("basic", gor::RatioKind::basic)
      .value("group", gor::RatioKind::group)
      .value("inverse", gor::RatioKind::inverse);

  py::class_<gor::OddsRatioRecord>(m, "OddsRatioRecord")
      .def_readonly("subset", &gor::OddsRatioRecord::subset)
      .def_readonly("reference", &gor::OddsRatioRecord::reference)
      .def_readonly("target", &gor::OddsRatioRecord::target)
      .def_readonly("exponent", &gor::OddsRatioRecord::exponent)
      .def_readonly("value", &gor::OddsRatioRecord::value)
      .def_readonly("kind", &gor::OddsRatioRecord::kind)
      .def_property_readonly("symbolic", &gor::symbolic_exponent)
      .def("__repr__", [](const gor::OddsRatioRecord& r) {
        return gor::kind_label(r.kind) + " " + gor::event_label(r.target) +
               " " + gor::subset_label(r.subset) + " exp(" +
               gor::symbolic_exponent(r) + ") = " + gor::format_full(r.value);
      });

  py::class_<gor::Dataset>(m, "Dataset")
      .def(py::init(&make_dataset), py::arg("x"), py::arg("y"),
           py::arg("weights") = std::nullopt,
           py::arg("var_names") = std::nullopt, py::arg("response_name") = "y")
      .def_readonly("n_vars", &gor::Dataset::n_vars)
      .def_readonly("var_names", &gor::Dataset::var_names)
      .def_readonly("response_name", &gor::Dataset::response_name)
      .def_readonly("x", &gor::Dataset::x)
      .def_readonly("y", &gor::Dataset::y)
      .def_readonly("weights", &gor::Dataset::weights)
      .def_property_readonly("n_rows", &gor::Dataset::n_rows);

  py::class_<gor::FitOptions>(m, "FitOptions")
      .def(py::init<>())
      .def_readwrite("max_iterations", &gor::FitOptions::max_iterations)
      .def_readwrite("score_tolerance", &gor::FitOptions::score_tolerance)
      .def_readwrite("divergence_bound", &gor::FitOptions::divergence_bound);

  py::class_<gor::FitResult>(m, "FitResult")
      .def_readonly("coefficients", &gor::FitResult::coefficients)
      .def_readonly("log_likelihood", &gor::FitResult::log_likelihood)
      .def_readonly("iterations", &gor::FitResult::iterations)
      .def_readonly("converged", &gor::FitResult::converged)
      .def_readonly("trajectory", &gor::FitResult::trajectory);

  py::class_<gor::EnsembleSummary>(m, "EnsembleSummary")
      .def_readonly("n_records", &gor::EnsembleSummary::n_records)
      .def_readonly("min_value", &gor::EnsembleSummary::min_value)
      .def_readonly("max_value", &gor::EnsembleSummary::max_value)
      .def_readonly("geometric_mean", &gor::EnsembleSummary::geometric_mean)
      .def_readonly("argmin", &gor::EnsembleSummary::argmin)
      .def_readonly("argmax", &gor::EnsembleSummary::argmax)
      .def_readonly("n_above_one", &gor::EnsembleSummary::n_above_one)
      .def_readonly("n_equal_one", &gor::EnsembleSummary::n_equal_one)
      .def_readonly("n_below_one", &gor::EnsembleSummary::n_below_one);

  py::enum_<gor::SyntheticDesign>(m, "SyntheticDesign")
      .value("uniform_events", gor::SyntheticDesign::uniform_events)
      .value("iid_bernoulli", gor::SyntheticDesign::iid_bernoulli);

  // events
  m.def("event_from_number", &gor::event_from_number, py::arg("n_vars"),
        py::arg("number"));
  m.def("event_from_bits", &gor::event_from_bits, py::arg("bits"));
  m.def("enumerate_events", &gor::enumerate_events, py::arg("n_vars"),
        py::arg("cap") = gor::kDefaultMaterializationCap);
  m.def("all_zeros", &gor::all_zeros, py::arg("n_vars"));
  m.def("all_ones", &gor::all_ones, py::arg("n_vars"));
  m.def("subset_from_event", &gor::subset_from_event, py::arg("target"));
  m.def("subset_from_members", &gor::subset_from_members, py::arg("n_vars"),
        py::arg("members"));
  m.def("indicator_event", &gor::indicator_event, py::arg("subset"));
  m.def("event_for_single_variable", &gor::event_for_single_variable,
        py::arg("n_vars"), py::arg("var_index"));
  m.def("reference_target_pairs", &gor::reference_target_pairs,
        py::arg("subset"), py::arg("cap") = gor::kDefaultMaterializationCap);

  // odds
  m.def("log_odds", &gor::log_odds, py::arg("coeffs"), py::arg("event"));
  m.def("odds_of_event", &gor::odds_of_event, py::arg("coeffs"),
        py::arg("event"));
  m.def("probability_of_event", &gor::probability_of_event, py::arg("coeffs"),
        py::arg("event"));
  m.def("oracle_odds_ratio", &gor::oracle_odds_ratio, py::arg("coeffs"),
        py::arg("reference"), py::arg("target"));

  // ratios
  m.def("basic_odds_ratio", &gor::basic_odds_ratio, py::arg("coeffs"),
        py::arg("var_index"));
  m.def("odds_ratio_between", &gor::odds_ratio_between, py::arg("coeffs"),
        py::arg("reference"), py::arg("target"));
  m.def("group_odds_ratio", &gor::group_odds_ratio, py::arg("coeffs"),
        py::arg("subset"));
  m.def("inverse_odds_ratio", &gor::inverse_odds_ratio, py::arg("coeffs"));
  m.def("ensemble", &gor::ensemble, py::arg("coeffs"),
        py::arg("include_inverse") = false,
        py::arg("cap") = gor::kDefaultMaterializationCap);
  m.def("ensemble_summary", &gor::ensemble_summary, py::arg("records"));

  // fit
  m.def("fit_logit", &gor::fit_logit, py::arg("data"),
        py::arg("options") = gor::FitOptions{});
  m.def("log_likelihood", &gor::log_likelihood, py::arg("coeffs"),
        py::arg("data"));
  m.def("score", &gor::score, py::arg("coeffs"), py::arg("data"));

  // data
  m.def("load_csv", &gor::load_csv, py::arg("path"),
        py::arg("response_column"),
        py::arg("weight_column") = std::nullopt);
  m.def("to_csv", &gor::to_csv, py::arg("data"));
  m.def("save_csv", &gor::save_csv, py::arg("data"), py::arg("path"));
  m.def("generate_synthetic", &gor::generate_synthetic, py::arg("coeffs"),
        py::arg("n_rows"), py::arg("seed"),
        py::arg("design") = gor::SyntheticDesign::uniform_events,
        py::arg("bernoulli_p") = 0.5);

  // verification
  py::class_<gor::VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("seeds", &gor::VerifyOptions::seeds)
      .def_readwrite("inject_error", &gor::VerifyOptions::inject_error);
  py::class_<gor::LawResult>(m, "LawResult")
      .def_readonly("law", &gor::LawResult::law)
      .def_readonly("checks", &gor::LawResult::checks)
      .def_readonly("worst_rel_err", &gor::LawResult::worst_rel_err)
      .def_readonly("tolerance", &gor::LawResult::tolerance)
      .def_readonly("passed", &gor::LawResult::passed)
      .def_readonly("counterexample", &gor::LawResult::counterexample);
  py::class_<gor::VerifyReport>(m, "VerifyReport")
      .def_readonly("laws", &gor::VerifyReport::laws)
      .def_readonly("all_passed", &gor::VerifyReport::all_passed)
      .def_readonly("worst_rel_err", &gor::VerifyReport::worst_rel_err);
  m.def("verify_model", &gor::verify_model, py::arg("coeffs"),
        py::arg("options") = gor::VerifyOptions{});

  m.attr("MAX_VARS") = gor::kMaxVars;
  m.attr("DEFAULT_MATERIALIZATION_CAP") = gor::kDefaultMaterializationCap;
  m.attr("__version__") = "0.1.0";
}
