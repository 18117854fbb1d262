#include "ltlfsynth/spec.hpp"

#include <sstream>

#include "ltlfsynth/parser.hpp"

namespace ltlfsynth {

Alphabet parse_partition(std::string_view text) {
  std::vector<std::string> inputs, outputs;
  bool seen_inputs = false, seen_outputs = false;
  std::istringstream in{std::string(text)};
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    if (head.back() == ':') head.pop_back();
    std::vector<std::string>* target = nullptr;
    if (head == ".inputs") {
      if (seen_inputs) throw std::invalid_argument("partition line " + std::to_string(lineno) + ": repeated .inputs");
      seen_inputs = true;
      target = &inputs;
    } else if (head == ".outputs") {
      if (seen_outputs) throw std::invalid_argument("partition line " + std::to_string(lineno) + ": repeated .outputs");
      seen_outputs = true;
      target = &outputs;
    } else {
      throw std::invalid_argument("partition line " + std::to_string(lineno) + ": expected .inputs or .outputs");
    }
    std::string w;
    while (words >> w) {
      if (w == ":") continue;
      if (w.front() == ':') w.erase(0, 1);
      target->push_back(w);
    }
  }
  if (!seen_inputs && !seen_outputs) throw std::invalid_argument("partition has no .inputs or .outputs line");
  return Alphabet(std::move(inputs), std::move(outputs));
}

SynthesisSpec make_spec(std::string_view formula_text, const Alphabet& alphabet) {
  PropTable props = alphabet.prop_table();
  Formula phi = parse_formula(formula_text, props, /*allow_new_props=*/false);
  return SynthesisSpec{phi, alphabet};
}

SynthesisSpec make_spec(Formula phi, const Alphabet& alphabet) {
  std::uint64_t allowed = alphabet.num_props() >= 64 ? ~0ULL : (std::uint64_t{1} << alphabet.num_props()) - 1;
  if (prop_mask(phi) & ~allowed)
    throw std::invalid_argument("formula mentions a proposition outside the partition");
  return SynthesisSpec{phi, alphabet};
}

}  // namespace ltlfsynth
