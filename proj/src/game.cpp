#include "ltlfsynth/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltlfsynth {

std::size_t GameResult::num_winning() const {
  return static_cast<std::size_t>(std::count_if(rank.begin(), rank.end(), [](auto r) { return r != kInfiniteRank; }));
}

GameResult solve_backward(const ExplicitDfa& g, bool parallel) {
  const auto n = static_cast<std::int64_t>(g.num_states());
  const Alphabet& ab = g.alphabet();
  const std::uint32_t nx = ab.num_input_moves(), ny = ab.num_output_moves();

  GameResult r;
  r.rank.assign(n, kInfiniteRank);
  r.chosen_output.assign(n, std::nullopt);
  for (std::int64_t s = 0; s < n; ++s)
    if (g.is_accepting(static_cast<StateId>(s))) r.rank[s] = 0;

  // found[s] = 1 + winning output for this layer, 0 if none
  std::vector<std::uint32_t> found(n);
  for (std::uint32_t k = 0;; ++k) {
    std::int64_t added = 0;
#if defined(LTLFSYNTH_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : added) if (parallel)
#endif
    for (std::int64_t s = 0; s < n; ++s) {
      found[s] = 0;
      if (r.rank[s] != kInfiniteRank) continue;
      for (std::uint32_t y = 0; y < ny && !found[s]; ++y) {
        bool all = true;
        for (std::uint32_t x = 0; x < nx && all; ++x)
          all = r.rank[g.next(static_cast<StateId>(s), ab.letter(x, y))] <= k;
        if (all) {
          found[s] = y + 1;
          ++added;
        }
      }
    }
    if (added == 0) break;
    for (std::int64_t s = 0; s < n; ++s) {
      if (found[s]) {
        r.rank[s] = k + 1;
        r.chosen_output[s] = found[s] - 1;
      }
    }
  }
  (void)parallel;
  return r;
}

GameResult solve_backward_reference(const ExplicitDfa& g) {
  const std::size_t n = g.num_states();
  const Alphabet& ab = g.alphabet();
  const std::uint32_t nx = ab.num_input_moves(), ny = ab.num_output_moves();

  // predecessor edges t <- (s, y), one per input move
  std::vector<std::vector<std::pair<StateId, std::uint32_t>>> preds(n);
  for (StateId s = 0; s < n; ++s)
    for (std::uint32_t y = 0; y < ny; ++y)
      for (std::uint32_t x = 0; x < nx; ++x) preds[g.next(s, ab.letter(x, y))].emplace_back(s, y);
  std::vector<std::uint32_t> pending(n * ny, nx);

  GameResult r;
  r.rank.assign(n, kInfiniteRank);
  r.chosen_output.assign(n, std::nullopt);
  std::vector<StateId> layer;
  for (StateId s = 0; s < n; ++s)
    if (g.is_accepting(s)) {
      r.rank[s] = 0;
      layer.push_back(s);
    }

  for (std::uint32_t k = 0; !layer.empty(); ++k) {
    std::vector<StateId> next_layer;
    for (StateId t : layer) {
      for (auto [s, y] : preds[t]) {
        if (--pending[std::size_t{s} * ny + y] != 0 || r.rank[s] <= k) continue;
        if (r.rank[s] == kInfiniteRank) {
          r.rank[s] = k + 1;
          r.chosen_output[s] = y;
          next_layer.push_back(s);
        } else if (y < *r.chosen_output[s]) {
          r.chosen_output[s] = y;  // same layer, lower output wins the tie
        }
      }
    }
    layer = std::move(next_layer);
  }
  return r;
}

std::optional<StateId> find_sink(const ExplicitDfa& g) {
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (g.is_accepting(s)) continue;
    auto row = g.row(s);
    if (std::all_of(row.begin(), row.end(), [s](StateId t) { return t == s; })) return s;
  }
  return std::nullopt;
}

WinningRegionDfa build_awr(const ExplicitDfa& g, const GameResult& r, bool minimize) {
  if (!r.is_winning(g.init())) throw std::logic_error("build_awr: initial state is not agent-winning");
  const Alphabet& ab = g.alphabet();
  const std::uint32_t nx = ab.num_input_moves(), ny = ab.num_output_moves();

  ExplicitDfa region(ab);
  std::vector<StateId> renum(g.num_states(), kNoState);
  for (StateId s = 0; s < g.num_states(); ++s)
    if (r.is_winning(s)) renum[s] = region.add_state(g.is_accepting(s), g.label(s));
  const StateId ew = region.add_state(false, "ew");
  for (Letter a = 0; a < region.num_letters(); ++a) region.set_next(ew, a, ew);

  for (StateId s = 0; s < g.num_states(); ++s) {
    if (renum[s] == kNoState) continue;
    for (std::uint32_t y = 0; y < ny; ++y) {
      bool safe = true;
      for (std::uint32_t x = 0; x < nx && safe; ++x) safe = r.is_winning(g.next(s, ab.letter(x, y)));
      for (std::uint32_t x = 0; x < nx; ++x) {
        Letter a = ab.letter(x, y);
        region.set_next(renum[s], a, safe ? renum[g.next(s, a)] : ew);
      }
    }
  }
  region.set_init(renum[g.init()]);

  ExplicitDfa out = minimize ? minimize_hopcroft(region) : trim_reachable(region);
  auto sink = find_sink(out);
  return WinningRegionDfa{std::move(out), sink};
}

std::vector<std::uint32_t> ewin_agent_choices(const WinningRegionDfa& w, StateId s) {
  const Alphabet& ab = w.dfa.alphabet();
  std::vector<std::uint32_t> out;
  if (!w.ew) return out;
  for (std::uint32_t y = 0; y < ab.num_output_moves(); ++y) {
    for (std::uint32_t x = 0; x < ab.num_input_moves(); ++x) {
      if (w.dfa.next(s, ab.letter(x, y)) == *w.ew) {
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

}  // namespace ltlfsynth
