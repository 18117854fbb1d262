#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ltlfsynth {

/// A letter is one assignment to every proposition of an alphabet; bit i is
/// proposition i. Input (environment) bits come first, output (agent) bits
/// above them.
using Letter = std::uint32_t;

/// Name -> dense index registry used while parsing formulas.
class PropTable {
 public:
  PropTable() = default;
  explicit PropTable(std::vector<std::string> names);

  std::optional<unsigned> find(std::string_view name) const;
  unsigned intern(std::string_view name);

  const std::string& name(unsigned index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, unsigned> index_;
};

/// Ordered X ∪ Y proposition list: environment inputs, then agent outputs.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::vector<std::string> inputs, std::vector<std::string> outputs);

  /// Every proposition treated as an input; handy for plain automata work.
  static Alphabet of_props(std::vector<std::string> names);

  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  std::vector<std::string> names() const;
  PropTable prop_table() const { return PropTable(names()); }

  unsigned num_inputs() const { return static_cast<unsigned>(inputs_.size()); }
  unsigned num_outputs() const { return static_cast<unsigned>(outputs_.size()); }
  unsigned num_props() const { return num_inputs() + num_outputs(); }

  std::uint32_t num_letters() const { return std::uint32_t{1} << num_props(); }
  std::uint32_t num_input_moves() const { return std::uint32_t{1} << num_inputs(); }
  std::uint32_t num_output_moves() const { return std::uint32_t{1} << num_outputs(); }

  Letter letter(std::uint32_t inputs, std::uint32_t outputs) const {
    return inputs | (outputs << num_inputs());
  }
  std::uint32_t input_part(Letter l) const { return l & (num_input_moves() - 1); }
  std::uint32_t output_part(Letter l) const { return l >> num_inputs(); }

  /// Space-separated signed literals, e.g. "x !y". Empty alphabets print "true".
  std::string format_letter(Letter l) const;
  std::string format_inputs(std::uint32_t inputs) const;
  std::string format_outputs(std::uint32_t outputs) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
};

/// Thrown when a search or construction exceeds one of its configured bounds.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  std::size_t max_states = 1'000'000;
  unsigned max_props = 20;
};

void check_prop_limit(const Alphabet& alphabet, const Limits& limits);

}  // namespace ltlfsynth
