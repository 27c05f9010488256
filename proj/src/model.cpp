#include "gor/model.hpp"

#include <cmath>
#include <sstream>

#include "gor/errors.hpp"

namespace gor {

void check_n_vars(int n_vars) {
  if (n_vars < 1 || n_vars > kMaxVars) {
    std::ostringstream msg;
    msg << "n_vars must be in 1.." << kMaxVars << ", got " << n_vars;
    throw DomainError(msg.str());
  }
}

void check_coefficients(const Coefficients& coeffs) {
  check_n_vars(coeffs.n_vars());
  if (!std::isfinite(coeffs.intercept)) {
    throw DomainError("intercept must be finite");
  }
  for (int i = 0; i < coeffs.n_vars(); ++i) {
    if (!std::isfinite(coeffs.betas[static_cast<std::size_t>(i)])) {
      std::ostringstream msg;
      msg << "coefficient b" << (i + 1) << " must be finite";
      throw DomainError(msg.str());
    }
  }
}

void check_dimensions(const Coefficients& coeffs, const Event& event) {
  if (coeffs.n_vars() != event.n_vars) {
    std::ostringstream msg;
    msg << "dimension mismatch: coefficients have N=" << coeffs.n_vars()
        << " but event has N=" << event.n_vars;
    throw DomainError(msg.str());
  }
}

void check_subset(const SubsetSpec& subset) {
  check_n_vars(subset.n_vars);
  int prev = 0;
  std::uint64_t number = 0;
  for (int m : subset.members) {
    if (m < 1 || m > subset.n_vars) {
      std::ostringstream msg;
      msg << "subset member x" << m << " out of range 1.." << subset.n_vars;
      throw DomainError(msg.str());
    }
    if (m <= prev) {
      throw DomainError("subset members must be strictly increasing");
    }
    prev = m;
    number |= std::uint64_t{1} << (subset.n_vars - m);
  }
  if (number != subset.number) {
    throw DomainError("subset number does not match its members");
  }
}

void check_dataset(const Dataset& data) {
  check_n_vars(data.n_vars);
  if (data.var_names.size() != static_cast<std::size_t>(data.n_vars)) {
    throw DomainError("dataset has a name count that differs from n_vars");
  }
  if (data.x.size() != data.y.size()) {
    throw DomainError("dataset has mismatched x and y row counts");
  }
  if (data.n_rows() == 0) {
    throw DomainError("dataset has no rows");
  }
  if (data.weighted() && data.weights.size() != data.n_rows()) {
    throw DomainError("dataset weight count differs from row count");
  }
  for (std::size_t r = 0; r < data.n_rows(); ++r) {
    if (data.x[r].size() != static_cast<std::size_t>(data.n_vars)) {
      std::ostringstream msg;
      msg << "row " << (r + 1) << " has " << data.x[r].size()
          << " explanatory cells, expected " << data.n_vars;
      throw DomainError(msg.str());
    }
    for (std::size_t c = 0; c < data.x[r].size(); ++c) {
      if (data.x[r][c] > 1) {
        std::ostringstream msg;
        msg << "cell at row " << (r + 1) << ", column \"" << data.var_names[c]
            << "\" is not 0 or 1";
        throw DomainError(msg.str());
      }
    }
    if (data.y[r] > 1) {
      std::ostringstream msg;
      msg << "response at row " << (r + 1) << " is not 0 or 1";
      throw DomainError(msg.str());
    }
    if (data.weighted() &&
        !(std::isfinite(data.weights[r]) && data.weights[r] > 0.0)) {
      std::ostringstream msg;
      msg << "weight at row " << (r + 1) << " must be a positive finite number";
      throw DomainError(msg.str());
    }
  }
}

}  // namespace gor
