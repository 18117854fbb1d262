#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ltlfsynth/formula.hpp"
#include "ltlfsynth/game.hpp"

namespace ltlfsynth {

/// Positional winning strategy as a halting Moore machine. State i mirrors
/// the i-th non-ew state of the region it was built from.
struct MooreStrategy {
  Alphabet alphabet;
  StateId init = 0;
  std::vector<std::uint32_t> output;  // Y bitmask per state
  std::vector<StateId> trans;         // state * num_input_moves + X
  std::vector<std::uint8_t> halting;
  std::vector<std::uint32_t> rank;
  std::vector<StateId> region_state;

  std::size_t num_states() const { return output.size(); }
  StateId next(StateId s, std::uint32_t x) const { return trans[std::size_t{s} * alphabet.num_input_moves() + x]; }
  bool is_halting(StateId s) const { return halting[s] != 0; }
};

/// Outputs follow the rank-minimizing choice of `r` (solved on w.dfa), so
/// every input strictly decreases the rank until a halting (accepting)
/// state. Halting states emit their lowest safe output and loop on
/// themselves. Throws std::logic_error when w's initial state is not
/// agent-winning in `r`.
MooreStrategy build_strategy(const WinningRegionDfa& w, const GameResult& r);

/// Convenience overload solving w.dfa first.
MooreStrategy build_strategy(const WinningRegionDfa& w);

struct VerifyResult {
  bool ok = true;
  std::size_t plays = 0;
  /// First failing input sequence (by enumeration order) and why it failed.
  std::vector<std::uint32_t> counterexample;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Enumerates every input sequence: each play must reach a halting state
/// within `depth_bound` rounds, and the trace read up to that point must
/// satisfy phi.
VerifyResult verify_strategy(const MooreStrategy& m, Formula phi, std::uint32_t depth_bound, bool parallel = true);

struct StepResult {
  StateId next;
  /// Output of `next`; empty once the play has halted.
  std::optional<std::uint32_t> output;
  bool halted;
};

/// Throws std::logic_error when `current` is halting.
StepResult play_step(const MooreStrategy& m, StateId current, std::uint32_t input);

/// Name-based front end over play_step.
class PlaySession {
 public:
  explicit PlaySession(const MooreStrategy& m) : m_(m), current_(m.init) {}

  StateId current() const { return current_; }
  bool halted() const { return m_.is_halting(current_); }
  std::uint32_t output() const { return m_.output[current_]; }
  std::string output_text() const { return m_.alphabet.format_outputs(output()); }

  /// Input propositions named in `names` are true, the rest false. Throws
  /// std::invalid_argument on names that are not inputs, std::logic_error
  /// after the play has halted.
  StepResult step(const std::vector<std::string>& names);

 private:
  const MooreStrategy& m_;
  StateId current_;
};

/// Nodes show the output literals, edges the input literals; halting
/// states are drawn with a double circle.
void write_strategy_dot(std::ostream& os, const MooreStrategy& m);

/// `state <i> out=<lits> halt=<0|1>` followed by `on <lits> -> <j>` lines.
void write_strategy_table(std::ostream& os, const MooreStrategy& m);

}  // namespace ltlfsynth
