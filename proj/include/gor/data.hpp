#ifndef GOR_DATA_HPP
#define GOR_DATA_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gor/model.hpp"

namespace gor {

// Reads a headered, comma-separated, UTF-8 file. Explanatory and response
// cells must be the literal characters 0 or 1; the optional weight column
// must hold positive numbers. Variable order follows column order.
Dataset load_csv(const std::string& path, const std::string& response_column,
                 const std::optional<std::string>& weight_column = std::nullopt);

// The same dialect going out. Weighted datasets gain a trailing weight
// column named "weight".
std::string to_csv(const Dataset& data);
void save_csv(const Dataset& data, const std::string& path);

enum class SyntheticDesign {
  // Each row's pattern drawn uniformly from the 2^N events.
  uniform_events,
  // Each variable drawn independently as Bernoulli(p_x).
  iid_bernoulli,
};

// Draws n_rows observations with x per the design and y ~
// Bernoulli(probability under the coefficients). Byte-for-byte reproducible
// from the seed: an mt19937_64 engine drives one uniform 64-bit draw per
// needed variate (one per row for uniform-events x, one per bit for
// iid-bernoulli x, then one for y), with doubles taken from the top 53 bits.
Dataset generate_synthetic(const Coefficients& coeffs, std::size_t n_rows,
                           std::uint64_t seed,
                           SyntheticDesign design = SyntheticDesign::uniform_events,
                           double bernoulli_p = 0.5);

}  // namespace gor

#endif  // GOR_DATA_HPP
