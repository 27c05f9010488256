#ifndef GOR_MODEL_HPP
#define GOR_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gor {

// Hard structural bound on the number of explanatory variables so that event
// numbers always fit in a 64-bit integer.
inline constexpr int kMaxVars = 63;

// Default cap on N for operations that materialize 2^N-sized collections.
// Streaming enumeration is not subject to it.
inline constexpr int kDefaultMaterializationCap = 20;

// One realization of all N binary explanatory variables. bits[i] holds the
// state of x_(i+1). The event number reads the bit pattern as an N-digit
// binary integer with x_1 as the most significant digit, so for N = 3 the
// pattern {0,1,0} is event number 2.
struct Event {
  int n_vars = 0;
  std::vector<std::uint8_t> bits;
  std::uint64_t number = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

// Logit parameters: intercept b0 plus one slope per variable, in log-odds
// units. betas[i] belongs to x_(i+1).
struct Coefficients {
  double intercept = 0.0;
  std::vector<double> betas;

  int n_vars() const { return static_cast<int>(betas.size()); }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// A subset of variable indices out of the power set of {x_1..x_N}. members
// are 1-based and strictly increasing. number is the event number of the
// subset's indicator event (bit i-1 set iff i is a member), which makes the
// empty set subset number 0 and keeps subset and event numbering aligned.
struct SubsetSpec {
  int n_vars = 0;
  std::vector<int> members;
  std::uint64_t number = 0;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }

  friend bool operator==(const SubsetSpec&, const SubsetSpec&) = default;
};

enum class RatioKind { basic, group, inverse };

// One computed odds ratio: the variable subset that changes state, the
// reference and target events of the transition, the exponent (sum of the
// member betas, negated for the inverse), and value = exp(exponent).
struct OddsRatioRecord {
  SubsetSpec subset;
  Event reference;
  Event target;
  double exponent = 0.0;
  double value = 1.0;
  RatioKind kind = RatioKind::basic;
};

// (0,1)-coded observation table: N explanatory columns plus one response
// column, with optional per-row positive weights for grouped data. An empty
// weights vector means every row counts once.
struct Dataset {
  int n_vars = 0;
  std::vector<std::string> var_names;
  std::string response_name;
  std::vector<std::vector<std::uint8_t>> x;  // row major, each row has n_vars cells
  std::vector<std::uint8_t> y;
  std::vector<double> weights;

  std::size_t n_rows() const { return y.size(); }
  bool weighted() const { return !weights.empty(); }
};

// Boundary checks. Internal code trusts values that already passed them.
void check_n_vars(int n_vars);
void check_coefficients(const Coefficients& coeffs);
void check_dimensions(const Coefficients& coeffs, const Event& event);
void check_subset(const SubsetSpec& subset);
void check_dataset(const Dataset& data);

}  // namespace gor

#endif  // GOR_MODEL_HPP
