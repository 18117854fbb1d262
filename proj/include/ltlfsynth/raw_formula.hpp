#pragma once

#include <string>
#include <vector>

#include "ltlfsynth/formula.hpp"

namespace ltlfsynth {

/// Surface syntax tree as produced by the parser: general negation and the
/// sugar operators are still present. Nothing past to_nnf sees this type.
struct RawFormula {
  enum class Op {
    True,
    False,
    Prop,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Next,
    WeakNext,
    Finally,
    Globally,
    Until,
    Release,
  };

  Op op = Op::True;
  unsigned prop = 0;
  std::vector<RawFormula> kids;

  static RawFormula leaf(Op op, unsigned prop = 0) { return RawFormula{op, prop, {}}; }
  static RawFormula unary(Op op, RawFormula f) { return RawFormula{op, 0, {std::move(f)}}; }
  static RawFormula binary(Op op, RawFormula l, RawFormula r) {
    return RawFormula{op, 0, {std::move(l), std::move(r)}};
  }

  std::size_t size() const;
};

/// Pushes negations to the propositions, expands ->, <->, F, G, and returns
/// the canonical NNF formula.
Formula to_nnf(const RawFormula& f);

/// Fully parenthesized surface syntax; parses back to the same tree shape.
std::string to_string(const RawFormula& f, const std::vector<std::string>& names);

}  // namespace ltlfsynth
