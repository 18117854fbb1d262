#include "ltlfsynth/alphabet.hpp"

#include <set>

namespace ltlfsynth {

PropTable::PropTable(std::vector<std::string> names) {
  for (auto& n : names) intern(n);
}

std::optional<unsigned> PropTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

unsigned PropTable::intern(std::string_view name) {
  if (auto found = find(name)) return *found;
  auto idx = static_cast<unsigned>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), idx);
  return idx;
}

Alphabet::Alphabet(std::vector<std::string> inputs, std::vector<std::string> outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  std::set<std::string> seen;
  for (const auto& n : inputs_)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate proposition '" + n + "'");
  for (const auto& n : outputs_)
    if (!seen.insert(n).second)
      throw std::invalid_argument("proposition '" + n + "' is both input and output");
  if (num_props() > 31) throw ResourceLimitError("alphabet exceeds 31 propositions");
}

Alphabet Alphabet::of_props(std::vector<std::string> names) { return Alphabet(std::move(names), {}); }

std::vector<std::string> Alphabet::names() const {
  std::vector<std::string> all = inputs_;
  all.insert(all.end(), outputs_.begin(), outputs_.end());
  return all;
}

namespace {

std::string signed_literals(const std::vector<std::string>& names, std::uint32_t mask) {
  if (names.empty()) return "true";
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!out.empty()) out += ' ';
    if (!(mask >> i & 1u)) out += '!';
    out += names[i];
  }
  return out;
}

}  // namespace

std::string Alphabet::format_letter(Letter l) const { return signed_literals(names(), l); }
std::string Alphabet::format_inputs(std::uint32_t x) const { return signed_literals(inputs_, x); }
std::string Alphabet::format_outputs(std::uint32_t y) const { return signed_literals(outputs_, y); }

void check_prop_limit(const Alphabet& alphabet, const Limits& limits) {
  if (alphabet.num_props() > limits.max_props)
    throw ResourceLimitError("proposition limit exceeded: " + std::to_string(alphabet.num_props()) +
                             " > max_props=" + std::to_string(limits.max_props));
}

}  // namespace ltlfsynth
