#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltlfsynth/game.hpp"
#include "ltlfsynth/strategy.hpp"

namespace ltlfsynth {

/// Minimized region of tt: a non-accepting initial state moving to an
/// accepting state that loops on every letter.
WinningRegionDfa tt_region(const Alphabet& alphabet);

/// Explicit pipeline: expand_full, solve_backward, build_awr.
std::optional<WinningRegionDfa> get_awr_explicit(const SynthesisSpec& spec, bool minimize = true,
                                                 const Limits& limits = {});

/// Region of (psi1 ∧ psi2) from the region w1 of psi1, by solving psi2 on
/// its own, taking the product and solving again. nullopt when the
/// conjunction is unrealizable.
std::optional<WinningRegionDfa> compose_individual(const WinningRegionDfa& w1, const SynthesisSpec& spec2,
                                                   const SearchOptions& options = {}, SearchStats* stats = nullptr);

/// Same contract, searching pairs (s1, s2) forward where s1 follows w1's
/// table and s2 is generated on the fly. Outputs that let the environment
/// push s1 into ew are skipped unless options.prune is false.
std::optional<WinningRegionDfa> compose_incremental(const WinningRegionDfa& w1, const SynthesisSpec& spec2,
                                                    const SearchOptions& options = {}, SearchStats* stats = nullptr);

enum class Mode { Incremental, Individual, Monolithic };
enum class Order { Given, SizeAsc };

std::string to_string(Mode m);
std::string to_string(Order o);
std::optional<Mode> parse_mode(std::string_view s);
std::optional<Order> parse_order(std::string_view s);

struct SynthesisOptions {
  Mode mode = Mode::Incremental;
  Order order = Order::Given;
  bool precheck = true;
  bool minimize = true;
  /// Exhaustively replay the strategy against the formula before returning.
  bool verify = false;
  bool parallel = true;
  /// Compare each intermediate region with the explicit pipeline on the
  /// conjunction composed so far. Slow; for tests.
  bool check_invariant = false;
  Limits limits;
};

struct Provenance {
  enum class Kind { UnrealizableConjunct, UnrealizableAfterComposing, FullComposition };
  Kind kind = Kind::FullComposition;
  std::size_t index = 0;  // 1-based conjunct position in the processing order

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// "conjunct:i", "composed:i" or "full".
std::string to_string(const Provenance& p);

struct SynthesisStats {
  std::size_t conjuncts = 0;
  double phase1_ms = 0, phase2_ms = 0, strategy_ms = 0;
  std::size_t expanded_states = 0;
  std::size_t max_region_states = 0;
  std::vector<std::size_t> region_states;  // after each composition step
  std::size_t strategy_states = 0;
  std::uint32_t init_rank = 0;
};

struct Verdict {
  bool realizable = false;
  Provenance provenance;
  std::optional<MooreStrategy> strategy;
  std::optional<WinningRegionDfa> region;
  /// Conjuncts in processing order (a single entry in monolithic mode).
  std::vector<Formula> conjuncts;
  SynthesisStats stats;
};

/// Conjunct-wise realizability precheck followed by a fold of
/// compositions starting from tt_region. Monolithic mode solves the whole
/// formula in one search. Realizable verdicts carry a strategy and the
/// final region.
Verdict synthesize(const SynthesisSpec& spec, const SynthesisOptions& options = {});

/// Single-line key=value record.
std::string stats_line(const Verdict& v, const SynthesisOptions& options);

}  // namespace ltlfsynth
