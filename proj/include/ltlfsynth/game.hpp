#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ltlfsynth/dfa.hpp"
#include "ltlfsynth/spec.hpp"

namespace ltlfsynth {

inline constexpr std::uint32_t kInfiniteRank = std::numeric_limits<std::uint32_t>::max();

/// Solution of the reachability game on a DFA arena where the agent picks
/// the output bits first and the environment answers with the input bits.
struct GameResult {
  /// Minimum number of rounds in which the agent can force an accepting
  /// state; kInfiniteRank for environment-winning states.
  std::vector<std::uint32_t> rank;
  /// Output move realizing the rank (lowest bitmask among the minimizers);
  /// empty for accepting and losing states.
  std::vector<std::optional<std::uint32_t>> chosen_output;

  bool is_winning(StateId s) const { return rank[s] != kInfiniteRank; }
  std::size_t num_winning() const;
};

/// Layered backward fixpoint: W0 = F, W(k+1) = W(k) ∪ {s : ∃Y ∀X δ(s, X∪Y) ∈ W(k)}.
/// Each layer is evaluated in parallel over states when `parallel` is set.
GameResult solve_backward(const ExplicitDfa& g, bool parallel = true);

/// Serial attractor with per-(state, output) counters over predecessor
/// lists. Kept as the reference for solve_backward.
GameResult solve_backward_reference(const ExplicitDfa& g);

/// Agent-winning region: the agent-winning states plus one sink `ew` that
/// absorbs every move that lets the environment escape them.
struct WinningRegionDfa {
  ExplicitDfa dfa;
  std::optional<StateId> ew;

  bool is_ew(StateId s) const { return ew && *ew == s; }
  /// States other than ew.
  std::size_t num_winning_states() const { return dfa.num_states() - (ew ? 1 : 0); }
  bool same_structure(const WinningRegionDfa& o) const { return ew == o.ew && dfa.same_structure(o.dfa); }
};

/// The non-accepting state whose every transition is a self-loop, if any.
std::optional<StateId> find_sink(const ExplicitDfa& g);

/// Region DFA from a solved arena:
///   δ'(s, X∪Y) = δ(s, X∪Y) if every X' keeps δ(s, X'∪Y) winning, ew otherwise.
/// Accepting states keep their outgoing transitions. The result is
/// minimized (canonical) unless `minimize` is false, in which case it is
/// only trimmed. Throws std::logic_error when init is not agent-winning.
WinningRegionDfa build_awr(const ExplicitDfa& g, const GameResult& r, bool minimize = true);

/// Outputs Y with some input X leading from s into ew; all outputs when s is ew.
std::vector<std::uint32_t> ewin_agent_choices(const WinningRegionDfa& w, StateId s);

struct SearchOptions {
  Limits limits;
  bool minimize = true;
  /// Iterate output/input moves from the highest bitmask down.
  bool descending = false;
  /// Incremental composition only: skip outputs in ewin_agent_choices.
  bool prune = true;
};

/// Counters filled by the forward searches.
struct SearchStats {
  std::size_t expanded_states = 0;    // states entered by the DFS
  std::size_t explored_choices = 0;   // (state, output) pairs whose inputs were tried
  std::size_t sink_pairs_entered = 0; // incremental: pair states whose first component is ew
  std::vector<std::uint32_t> init_outputs_explored;
};

/// Forward on-the-fly search computing every agent-winning state reachable
/// from the initial state (all outputs are tried even after a state is
/// known to win). Returns the minimized region, or nullopt when the
/// specification is unrealizable.
std::optional<WinningRegionDfa> get_awr_otf(const SynthesisSpec& spec, const SearchOptions& options = {},
                                            SearchStats* stats = nullptr);

/// Same engine in early-termination mode: a state stops at its first
/// winning output and the search stops once the initial state is decided.
bool check_realizable_otf(const SynthesisSpec& spec, const SearchOptions& options = {},
                          SearchStats* stats = nullptr);

}  // namespace ltlfsynth
