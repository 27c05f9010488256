#ifndef GOR_MODEL_IO_HPP
#define GOR_MODEL_IO_HPP

#include <string>
#include <vector>

#include "gor/fit.hpp"
#include "gor/model.hpp"

namespace gor {

// On-disk model, JSON schema 1:
//   { "schema": 1, "n_vars": N, "var_names": [...], "intercept": b0,
//     "betas": [...],
//     "fit": { "log_likelihood": ..., "iterations": ..., "converged": ... } }
// The "fit" object is present only for fitted models.
struct ModelFile {
  Coefficients coefficients;
  std::vector<std::string> var_names;
  bool has_fit = false;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool converged = false;
};

ModelFile model_from_fit(const FitResult& fit,
                         std::vector<std::string> var_names);

// Bare coefficients; names default to x1..xN.
ModelFile model_from_coefficients(const Coefficients& coeffs);

std::string model_to_json(const ModelFile& model);
ModelFile model_from_json(const std::string& text);

void save_model(const ModelFile& model, const std::string& path);
ModelFile load_model(const std::string& path);

}  // namespace gor

#endif  // GOR_MODEL_IO_HPP
