#include "gor/data.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "gor/errors.hpp"
#include "gor/events.hpp"
#include "gor/odds.hpp"

namespace gor {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  return cells;
}

std::uint8_t parse_binary_cell(const std::string& cell, std::size_t data_row,
                               const std::string& column_name) {
  if (cell == "0") return 0;
  if (cell == "1") return 1;
  std::ostringstream msg;
  msg << "invalid cell \"" << cell << "\" at row " << data_row << ", column \""
      << column_name << "\": explanatory and response cells must be the "
      << "literal 0 or 1";
  throw ValidationError(msg.str(), data_row, column_name);
}

double parse_weight_cell(const std::string& cell, std::size_t data_row,
                         const std::string& column_name) {
  std::size_t consumed = 0;
  double value = 0.0;
  bool bad = cell.empty();
  if (!bad) {
    try {
      value = std::stod(cell, &consumed);
    } catch (const std::exception&) {
      bad = true;
    }
  }
  if (bad || consumed != cell.size() || !std::isfinite(value) || value <= 0.0) {
    std::ostringstream msg;
    msg << "invalid weight \"" << cell << "\" at row " << data_row
        << ", column \"" << column_name << "\": weights must be positive "
        << "numbers";
    throw ValidationError(msg.str(), data_row, column_name);
  }
  return value;
}

// Uniform double in [0,1) from the engine's top 53 bits. Fixed here rather
// than taken from <random> distributions so output is identical across
// standard library implementations.
double next_unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Dataset load_csv(const std::string& path, const std::string& response_column,
                 const std::optional<std::string>& weight_column) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open \"" + path + "\"");
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw SchemaError("\"" + path + "\" is empty; expected a header row");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  const std::vector<std::string> header = split_line(line);

  int response_idx = -1;
  int weight_idx = -1;
  Dataset data;
  std::vector<int> var_columns;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == response_column && response_idx < 0) {
      response_idx = static_cast<int>(c);
    } else if (weight_column && header[c] == *weight_column && weight_idx < 0) {
      weight_idx = static_cast<int>(c);
    } else {
      var_columns.push_back(static_cast<int>(c));
      data.var_names.push_back(header[c]);
    }
  }
  if (response_idx < 0) {
    throw SchemaError("response column \"" + response_column +
                      "\" not found in \"" + path + "\"");
  }
  if (weight_column && weight_idx < 0) {
    throw SchemaError("weight column \"" + *weight_column +
                      "\" not found in \"" + path + "\"");
  }
  if (var_columns.empty()) {
    throw SchemaError("\"" + path + "\" has no explanatory columns");
  }
  data.n_vars = static_cast<int>(var_columns.size());
  data.response_name = response_column;
  check_n_vars(data.n_vars);

  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) {
      break;  // trailing newline
    }
    ++data_row;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      std::ostringstream msg;
      msg << "row " << data_row << " has " << cells.size()
          << " cells, header has " << header.size();
      throw SchemaError(msg.str());
    }
    std::vector<std::uint8_t> x;
    x.reserve(var_columns.size());
    for (std::size_t j = 0; j < var_columns.size(); ++j) {
      const auto c = static_cast<std::size_t>(var_columns[j]);
      x.push_back(parse_binary_cell(cells[c], data_row, header[c]));
    }
    data.x.push_back(std::move(x));
    data.y.push_back(parse_binary_cell(
        cells[static_cast<std::size_t>(response_idx)], data_row,
        response_column));
    if (weight_idx >= 0) {
      data.weights.push_back(parse_weight_cell(
          cells[static_cast<std::size_t>(weight_idx)], data_row,
          *weight_column));
    }
  }
  if (data_row == 0) {
    throw SchemaError("\"" + path + "\" has a header but no data rows");
  }

  bool any_zero = false;
  bool any_one = false;
  for (std::uint8_t v : data.y) {
    (v == 0 ? any_zero : any_one) = true;
  }
  if (!any_zero || !any_one) {
    std::ostringstream msg;
    msg << "response column \"" << response_column << "\" is " << (any_one ? 1 : 0)
        << " in every row; a fittable dataset needs both classes";
    throw DegenerateResponseError(msg.str());
  }

  check_dataset(data);
  return data;
}

std::string to_csv(const Dataset& data) {
  check_dataset(data);
  std::ostringstream out;
  for (const std::string& name : data.var_names) {
    out << name << ',';
  }
  out << data.response_name;
  if (data.weighted()) {
    out << ",weight";
  }
  out << '\n';
  char buf[32];
  for (std::size_t r = 0; r < data.n_rows(); ++r) {
    for (std::uint8_t b : data.x[r]) {
      out << static_cast<int>(b) << ',';
    }
    out << static_cast<int>(data.y[r]);
    if (data.weighted()) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.weights[r]);
      out << ',' << buf;
    }
    out << '\n';
  }
  return out.str();
}

void save_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw SchemaError("cannot write \"" + path + "\"");
  }
  out << to_csv(data);
}

Dataset generate_synthetic(const Coefficients& coeffs, std::size_t n_rows,
                           std::uint64_t seed, SyntheticDesign design,
                           double bernoulli_p) {
  check_coefficients(coeffs);
  if (n_rows < 1) {
    throw DomainError("n_rows must be at least 1");
  }
  if (design == SyntheticDesign::iid_bernoulli &&
      !(bernoulli_p > 0.0 && bernoulli_p < 1.0)) {
    throw DomainError("bernoulli_p must lie strictly inside (0,1)");
  }

  const int n = coeffs.n_vars();
  Dataset data;
  data.n_vars = n;
  for (int i = 1; i <= n; ++i) {
    data.var_names.push_back("x" + std::to_string(i));
  }
  data.response_name = "y";
  data.x.reserve(n_rows);
  data.y.reserve(n_rows);

  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::size_t r = 0; r < n_rows; ++r) {
    Event event{};
    if (design == SyntheticDesign::uniform_events) {
      // The event count is a power of two, so masking is exactly uniform.
      event = event_from_number(n, rng() & mask);
    } else {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        bits[static_cast<std::size_t>(i)] =
            next_unit_double(rng) < bernoulli_p ? 1 : 0;
      }
      event = event_from_bits(bits);
    }
    const double p = probability_of_event(coeffs, event);
    data.x.push_back(event.bits);
    data.y.push_back(next_unit_double(rng) < p ? 1 : 0);
  }
  return data;
}

}  // namespace gor
