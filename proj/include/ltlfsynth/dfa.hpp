#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltlfsynth/alphabet.hpp"

namespace ltlfsynth {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// Complete DFA over 2^(X ∪ Y) with a dense state-major transition table.
class ExplicitDfa {
 public:
  ExplicitDfa() = default;
  explicit ExplicitDfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint32_t num_letters() const { return alphabet_.num_letters(); }
  std::size_t num_states() const { return accepting_.size(); }

  StateId init() const { return init_; }
  void set_init(StateId s) { init_ = s; }

  /// New state with every transition unset (kNoState).
  StateId add_state(bool accepting, std::string label = {});

  StateId next(StateId s, Letter a) const { return trans_[std::size_t{s} * num_letters() + a]; }
  void set_next(StateId s, Letter a, StateId t) { trans_[std::size_t{s} * num_letters() + a] = t; }
  std::span<const StateId> row(StateId s) const {
    return {trans_.data() + std::size_t{s} * num_letters(), num_letters()};
  }

  bool is_accepting(StateId s) const { return accepting_[s] != 0; }
  void set_accepting(StateId s, bool acc) { accepting_[s] = acc; }

  const std::string& label(StateId s) const { return labels_[s]; }
  void set_label(StateId s, std::string label) { labels_[s] = std::move(label); }

  /// True iff init is a state and every transition targets a state.
  bool is_complete() const;

  /// Same alphabet, init, table and accepting set. Labels are ignored.
  bool same_structure(const ExplicitDfa& other) const;

 private:
  Alphabet alphabet_;
  StateId init_ = 0;
  std::vector<StateId> trans_;
  std::vector<std::uint8_t> accepting_;
  std::vector<std::string> labels_;
};

/// Membership: run the table and test the final state.
bool accepts(const ExplicitDfa& g, std::span<const Letter> trace);

/// Reachable part of the pair construction; accepting iff both are.
/// Throws std::invalid_argument when the alphabets differ.
ExplicitDfa product(const ExplicitDfa& g1, const ExplicitDfa& g2);

/// Drops unreachable states and renumbers in BFS order (letters ascending).
ExplicitDfa trim_reachable(const ExplicitDfa& g);

/// Minimal complete DFA in canonical BFS numbering, via Hopcroft's
/// partition refinement.
ExplicitDfa minimize_hopcroft(const ExplicitDfa& g);

/// Same result via Moore's round-based refinement; the per-round signature
/// pass runs in parallel when `parallel` is set and OpenMP is available.
ExplicitDfa minimize_moore(const ExplicitDfa& g, bool parallel = true);

/// Builds the quotient of g by `block` (one entry per state), renumbered
/// canonically from init. Each block keeps the label of its lowest member.
ExplicitDfa quotient(const ExplicitDfa& g, std::span<const std::uint32_t> block);

// --- exchange formats -----------------------------------------------------

/// Graphviz: nodes "idx\nlabel", doublecircle when accepting, one edge per
/// (source, target) whose label lists the letters, one per line.
void write_dot(std::ostream& os, const ExplicitDfa& g, std::optional<StateId> ew = std::nullopt);

/// Plain-text dump:
///   dfa <nstates> <init> <nprops>
///   state <idx> <0|1>            (one per state)
///   t <from> <letter> <to>       (one per transition)
///   ew <idx>                     (winning regions only)
void write_dump(std::ostream& os, const ExplicitDfa& g, std::optional<StateId> ew = std::nullopt);

struct DfaDump {
  ExplicitDfa dfa;
  std::optional<StateId> ew;
};

/// Reads write_dump output; the proposition count must match `alphabet`.
/// Throws std::invalid_argument on malformed or incomplete input.
DfaDump read_dump(std::istream& is, const Alphabet& alphabet);

}  // namespace ltlfsynth
