#pragma once

// Forward tri-state game search shared by get_awr_otf, check_realizable_otf
// and incremental composition.

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "ltlfsynth/game.hpp"

namespace ltlfsynth::detail {

enum class Status : std::uint8_t { Unvisited, Undetermined, Awin, Ewin };

/// Arena requirements:
///   const Alphabet& alphabet() const;
///   std::size_t num_states() const;
///   StateId initial() const;
///   StateId successor(StateId, Letter);
///   std::optional<StateId> cached_successor(StateId, Letter) const;
///   bool is_accepting(StateId) const;
///   bool output_allowed(StateId, std::uint32_t) const;
///   std::string describe(StateId) const;
///
/// Depth-first search classifying states as agent-winning, environment-
/// winning, or undetermined. SCCs are tracked with Tarjan's algorithm; when
/// an SCC root closes, a counter-based backward fixpoint inside the SCC
/// promotes states with an output whose inputs all reach winning states,
/// and whatever is still undetermined becomes environment-winning (every
/// exit from a closed SCC is already decided).
template <class Arena>
class OtfSearch {
 public:
  /// `full`: keep exploring after a state is won, so every winning state
  /// reachable from init is found. Otherwise stop at the first winning
  /// output and once init is decided.
  OtfSearch(Arena& arena, bool full, bool descending, SearchStats* stats)
      : arena_(arena),
        full_(full),
        descending_(descending),
        stats_(stats),
        nx_(arena.alphabet().num_input_moves()),
        ny_(arena.alphabet().num_output_moves()) {}

  void run() {
    enter(arena_.initial());
    while (!frames_.empty() && !stopped_) step();
  }

  Status status(StateId s) const { return s < status_.size() ? status_[s] : Status::Unvisited; }
  bool init_winning() const { return status(arena_.initial()) == Status::Awin; }

  /// Region over the winning states found; requires a full search with a
  /// winning initial state.
  WinningRegionDfa build_region(bool minimize) const {
    const Alphabet& ab = arena_.alphabet();
    ExplicitDfa region(ab);
    std::vector<StateId> renum(status_.size(), kNoState);
    // init first so it keeps id 0 before canonical renumbering
    std::vector<StateId> order{arena_.initial()};
    for (StateId s = 0; s < status_.size(); ++s)
      if (s != arena_.initial()) order.push_back(s);
    for (StateId s : order)
      if (status_[s] == Status::Awin) renum[s] = region.add_state(arena_.is_accepting(s), arena_.describe(s));
    const StateId ew = region.add_state(false, "ew");
    for (Letter a = 0; a < region.num_letters(); ++a) region.set_next(ew, a, ew);

    for (StateId s : order) {
      if (renum[s] == kNoState) continue;
      for (std::uint32_t y = 0; y < ny_; ++y) {
        bool safe = arena_.output_allowed(s, y);
        for (std::uint32_t x = 0; x < nx_ && safe; ++x) {
          auto t = arena_.cached_successor(s, ab.letter(x, y));
          safe = t && status(*t) == Status::Awin;
        }
        for (std::uint32_t x = 0; x < nx_; ++x) {
          Letter a = ab.letter(x, y);
          region.set_next(renum[s], a, safe ? renum[*arena_.cached_successor(s, a)] : ew);
        }
      }
    }
    region.set_init(renum[arena_.initial()]);
    ExplicitDfa out = minimize ? minimize_hopcroft(region) : trim_reachable(region);
    auto sink = find_sink(out);
    return WinningRegionDfa{std::move(out), sink};
  }

 private:
  struct Frame {
    StateId s;
    std::uint32_t yi = 0;
    std::uint32_t xi = 0;
    bool y_started = false;
    bool ewin_all_y = true;
    bool ewin_some_x = false;
    bool undet_some_x = false;
    StateId child = kNoState;
  };

  std::uint32_t output_at(std::uint32_t i) const { return descending_ ? ny_ - 1 - i : i; }
  std::uint32_t input_at(std::uint32_t i) const { return descending_ ? nx_ - 1 - i : i; }

  void grow() {
    std::size_t n = arena_.num_states();
    if (status_.size() >= n) return;
    status_.resize(n, Status::Unvisited);
    index_.resize(n, 0);
    lowlink_.resize(n, 0);
    on_stack_.resize(n, 0);
  }

  void enter(StateId s) {
    grow();
    index_[s] = lowlink_[s] = counter_++;
    tarjan_.push_back(s);
    on_stack_[s] = 1;
    status_[s] = arena_.is_accepting(s) ? Status::Awin : Status::Undetermined;
    if (stats_) ++stats_->expanded_states;
    Frame f{s};
    if (!full_ && status_[s] == Status::Awin) f.yi = ny_;
    frames_.push_back(f);
    check_stop();
  }

  void check_stop() {
    if (!full_ && status(arena_.initial()) != Status::Undetermined) stopped_ = true;
  }

  void absorb(Frame& f, StateId t) {
    if (status_[t] == Status::Ewin) {
      f.ewin_some_x = true;
      f.xi = nx_;
    } else {
      if (status_[t] == Status::Undetermined) f.undet_some_x = true;
      ++f.xi;
    }
  }

  void step() {
    Frame& f = frames_.back();
    const StateId s = f.s;
    if (f.child != kNoState) {
      StateId c = f.child;
      f.child = kNoState;
      lowlink_[s] = std::min(lowlink_[s], lowlink_[c]);
      absorb(f, c);
      return;
    }
    if (f.yi < ny_) {
      const std::uint32_t y = output_at(f.yi);
      if (!f.y_started) {
        if (!arena_.output_allowed(s, y)) {
          ++f.yi;
          return;
        }
        f.y_started = true;
        f.xi = 0;
        f.ewin_some_x = f.undet_some_x = false;
        if (stats_) {
          ++stats_->explored_choices;
          if (s == arena_.initial()) stats_->init_outputs_explored.push_back(y);
        }
      }
      if (f.xi < nx_) {
        const StateId t = arena_.successor(s, arena_.alphabet().letter(input_at(f.xi), y));
        grow();
        if (status_[t] == Status::Unvisited) {
          f.child = t;
          enter(t);  // invalidates f
          return;
        }
        if (on_stack_[t]) lowlink_[s] = std::min(lowlink_[s], index_[t]);
        absorb(f, t);
        return;
      }
      if (!f.ewin_some_x) {
        f.ewin_all_y = false;
        if (!f.undet_some_x && status_[s] != Status::Awin) {
          status_[s] = Status::Awin;
          check_stop();
        }
      }
      f.y_started = false;
      ++f.yi;
      if (!full_ && status_[s] == Status::Awin) f.yi = ny_;
      return;
    }

    if (f.ewin_all_y && status_[s] != Status::Awin) {
      status_[s] = Status::Ewin;
      check_stop();
    }
    if (lowlink_[s] == index_[s]) close_scc(s);
    frames_.pop_back();
  }

  void close_scc(StateId root) {
    std::vector<StateId> scc;
    StateId v;
    do {
      v = tarjan_.back();
      tarjan_.pop_back();
      on_stack_[v] = 0;
      scc.push_back(v);
    } while (v != root);
    resolve(scc);
    check_stop();
  }

  void resolve(const std::vector<StateId>& scc) {
    const Alphabet& ab = arena_.alphabet();
    std::vector<StateId> undecided;
    for (StateId s : scc)
      if (status_[s] == Status::Undetermined) undecided.push_back(s);
    if (undecided.empty()) return;

    // local ids for the (state, output) counters
    std::unordered_map<StateId, std::uint32_t> local;
    for (std::uint32_t i = 0; i < undecided.size(); ++i) local.emplace(undecided[i], i);
    std::vector<std::uint32_t> pending(undecided.size() * std::size_t{ny_}, 0);
    std::unordered_map<StateId, std::vector<std::pair<std::uint32_t, std::uint32_t>>> waiting;
    std::vector<StateId> queue;

    for (std::uint32_t i = 0; i < undecided.size(); ++i) {
      const StateId s = undecided[i];
      bool won = false;
      for (std::uint32_t y = 0; y < ny_ && !won; ++y) {
        if (!arena_.output_allowed(s, y)) continue;
        bool dead = false;
        std::uint32_t count = 0;
        std::vector<StateId> blockers;
        for (std::uint32_t x = 0; x < nx_ && !dead; ++x) {
          auto t = arena_.cached_successor(s, ab.letter(x, y));
          if (!t || status(*t) == Status::Ewin || (status(*t) == Status::Undetermined && !local.contains(*t))) {
            dead = true;
          } else if (status(*t) == Status::Undetermined) {
            ++count;
            blockers.push_back(*t);
          }
        }
        if (dead) continue;
        if (count == 0) {
          won = true;
          break;
        }
        pending[std::size_t{i} * ny_ + y] = count;
        for (StateId t : blockers) waiting[t].emplace_back(i, y);
      }
      if (won) {
        status_[s] = Status::Awin;
        queue.push_back(s);
      }
    }

    while (!queue.empty()) {
      StateId t = queue.back();
      queue.pop_back();
      auto it = waiting.find(t);
      if (it == waiting.end()) continue;
      for (auto [i, y] : it->second) {
        StateId s = undecided[i];
        if (status_[s] != Status::Undetermined) continue;
        if (--pending[std::size_t{i} * ny_ + y] == 0) {
          status_[s] = Status::Awin;
          queue.push_back(s);
        }
      }
    }
    for (StateId s : undecided)
      if (status_[s] == Status::Undetermined) status_[s] = Status::Ewin;
  }

  Arena& arena_;
  bool full_;
  bool descending_;
  SearchStats* stats_;
  std::uint32_t nx_, ny_;

  std::vector<Status> status_;
  std::vector<std::uint32_t> index_, lowlink_;
  std::vector<std::uint8_t> on_stack_;
  std::vector<StateId> tarjan_;
  std::vector<Frame> frames_;
  std::uint32_t counter_ = 0;
  bool stopped_ = false;
};

}  // namespace ltlfsynth::detail
