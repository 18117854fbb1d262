#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ltlfsynth/raw_formula.hpp"

namespace ltlfsynth {

/// Seeded generator of surface-syntax formulas. Draws only from the raw
/// 64-bit engine output, so sequences are identical on every platform.
class RandomFormulaGenerator {
 public:
  explicit RandomFormulaGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// A formula with exactly `size` nodes over propositions [0, num_props).
  RawFormula formula(unsigned num_props, unsigned size);

 private:
  RawFormula leaf(unsigned num_props);
  std::mt19937_64 engine_;
};

struct RandomSpecParams {
  std::uint64_t seed = 1;
  unsigned conjuncts = 3;
  unsigned size = 5;
  unsigned inputs = 2;
  unsigned outputs = 2;
};

struct RandomSpecText {
  std::string formula;    // one line, conjuncts joined by &&
  std::string partition;  // .inputs / .outputs lines
};

/// Conjunction of `conjuncts` random formulas of `size` nodes each, over
/// inputs i0.. and outputs o0..; every conjunct mentions an output.
/// Throws std::invalid_argument on zero bounds.
RandomSpecText generate_random_spec(const RandomSpecParams& params);

}  // namespace ltlfsynth
