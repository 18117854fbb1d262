#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "ltlfsynth/alphabet.hpp"
#include "ltlfsynth/formula.hpp"

namespace ltlfsynth {

/// A finite, non-empty sequence of letters.
using Trace = std::vector<Letter>;

/// Finite-trace satisfaction checker for a fixed formula. Builds a
/// subformula-by-position table bottom-up, so one instance can be reused
/// across many traces.
class TraceEvaluator {
 public:
  explicit TraceEvaluator(Formula f);

  /// Throws std::invalid_argument on an empty trace.
  bool operator()(std::span<const Letter> trace) const;

 private:
  std::vector<Formula> order_;
  std::vector<std::vector<std::size_t>> kid_index_;
  mutable std::vector<std::uint8_t> table_;
};

/// rho |= f.
bool evaluate(std::span<const Letter> trace, Formula f);

}  // namespace ltlfsynth
