#ifndef GOR_VERIFY_HPP
#define GOR_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gor/model.hpp"

namespace gor {

// Exhaustive law checking is bounded to keep the 3^N pair scan tractable.
inline constexpr int kMaxVerifyVars = 12;

struct VerifyOptions {
  // Extra randomly drawn coefficient vectors (same N) to scan besides the
  // given one. Deterministic: vector k comes from engine seed k.
  int seeds = 0;
  // Harness self-test knob: multiplies the closed-form side of the oracle
  // equivalence law by (1 + inject_error). Leave at 0 for real checks.
  double inject_error = 0.0;
};

struct LawResult {
  std::string law;
  std::size_t checks = 0;
  double worst_rel_err = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string counterexample;  // set on first failure
};

struct VerifyReport {
  std::vector<LawResult> laws;
  bool all_passed = true;
  double worst_rel_err = 0.0;
};

// Scans every law the ratio calculus must satisfy, exhaustively over all
// pure 0 -> 1 event pairs and all non-empty subsets:
//   - oracle equivalence: closed-form record value vs the literal odds
//     quotient, relative 1e-10
//   - product law: group value vs product of member basic values, 1e-12
//   - context-free law: one value per variable across all its pairs, 1e-12
//   - subsumption: ensemble rows at single-variable targets equal the basic
//     records exactly
//   - inverse law: inverse times full-set group value is 1, 1e-12
//   - intercept invariance: closed-form values identical and oracle values
//     within 1e-10 under intercept shifts
VerifyReport verify_model(const Coefficients& coeffs,
                          const VerifyOptions& options = {});

}  // namespace gor

#endif  // GOR_VERIFY_HPP
