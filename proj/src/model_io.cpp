#include "gor/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gor/errors.hpp"

namespace gor {

using nlohmann::json;

ModelFile model_from_fit(const FitResult& fit,
                         std::vector<std::string> var_names) {
  if (var_names.size() != fit.coefficients.betas.size()) {
    throw DomainError("variable name count differs from coefficient count");
  }
  ModelFile model;
  model.coefficients = fit.coefficients;
  model.var_names = std::move(var_names);
  model.has_fit = true;
  model.log_likelihood = fit.log_likelihood;
  model.iterations = fit.iterations;
  model.converged = fit.converged;
  return model;
}

ModelFile model_from_coefficients(const Coefficients& coeffs) {
  check_coefficients(coeffs);
  ModelFile model;
  model.coefficients = coeffs;
  for (int i = 1; i <= coeffs.n_vars(); ++i) {
    model.var_names.push_back("x" + std::to_string(i));
  }
  return model;
}

std::string model_to_json(const ModelFile& model) {
  json j;
  j["schema"] = 1;
  j["n_vars"] = model.coefficients.n_vars();
  j["var_names"] = model.var_names;
  j["intercept"] = model.coefficients.intercept;
  j["betas"] = model.coefficients.betas;
  if (model.has_fit) {
    j["fit"] = {{"log_likelihood", model.log_likelihood},
                {"iterations", model.iterations},
                {"converged", model.converged}};
  }
  return j.dump(2) + "\n";
}

ModelFile model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != 1) {
      throw SchemaError("unsupported model schema version");
    }
    ModelFile model;
    model.coefficients.intercept = j.at("intercept").get<double>();
    model.coefficients.betas = j.at("betas").get<std::vector<double>>();
    model.var_names = j.at("var_names").get<std::vector<std::string>>();
    if (j.at("n_vars").get<int>() != model.coefficients.n_vars() ||
        model.var_names.size() != model.coefficients.betas.size()) {
      throw SchemaError("model file dimensions are inconsistent");
    }
    if (j.contains("fit")) {
      const json& f = j.at("fit");
      model.has_fit = true;
      model.log_likelihood = f.at("log_likelihood").get<double>();
      model.iterations = f.at("iterations").get<int>();
      model.converged = f.at("converged").get<bool>();
    }
    check_coefficients(model.coefficients);
    return model;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model file is missing fields: ") + e.what());
  }
}

void save_model(const ModelFile& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw SchemaError("cannot write \"" + path + "\"");
  }
  out << model_to_json(model);
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SchemaError("cannot open \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

}  // namespace gor
