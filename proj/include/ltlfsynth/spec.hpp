#pragma once

#include <string_view>

#include "ltlfsynth/alphabet.hpp"
#include "ltlfsynth/formula.hpp"

namespace ltlfsynth {

/// (phi, X, Y): the formula's proposition indices are positions in
/// alphabet.names(), so inputs occupy the low letter bits.
struct SynthesisSpec {
  Formula phi;
  Alphabet alphabet;
};

/// Reads the `.part` convention:
///   .inputs: a b c
///   .outputs: d e
/// The colon is optional and either line may be absent (empty set).
/// Throws std::invalid_argument on malformed content.
Alphabet parse_partition(std::string_view text);

/// Parses formula text against the partition; propositions outside X ∪ Y
/// are a ParseError.
SynthesisSpec make_spec(std::string_view formula_text, const Alphabet& alphabet);

/// Throws std::invalid_argument when phi mentions a proposition index
/// outside the alphabet.
SynthesisSpec make_spec(Formula phi, const Alphabet& alphabet);

}  // namespace ltlfsynth
