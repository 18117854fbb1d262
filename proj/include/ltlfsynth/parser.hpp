#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ltlfsynth/alphabet.hpp"
#include "ltlfsynth/formula.hpp"
#include "ltlfsynth/raw_formula.hpp"

namespace ltlfsynth {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, unsigned line, unsigned column);
  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  unsigned line_;
  unsigned column_;
};

/// Grammar, loosest to tightest binding:
///   <->  (left)   ->  (right)   || |  (left)   && &  (left)   U R  (right)
///   prefix ! X N F G
///   atoms: true tt false ff identifier ( formula )
/// X is strong next, N weak next.
///
/// Unknown identifiers are registered in `props` unless `allow_new_props`
/// is false, in which case they are a ParseError.
RawFormula parse_raw(std::string_view text, PropTable& props, bool allow_new_props = true);

Formula parse_formula(std::string_view text, PropTable& props, bool allow_new_props = true);

}  // namespace ltlfsynth
