#include "ltlfsynth/compose.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ltlfsynth/otf_dfa.hpp"
#include "otf_search.hpp"

namespace ltlfsynth {

namespace {

void check_alphabets(const WinningRegionDfa& w1, const SynthesisSpec& spec2) {
  if (!(w1.dfa.alphabet() == spec2.alphabet)) throw std::invalid_argument("compose: alphabets differ");
}

class PairArena {
 public:
  PairArena(const WinningRegionDfa& w1, OtfDfa& d2, bool prune, const Limits& limits, SearchStats* stats)
      : w1_(w1), d2_(d2), limits_(limits), stats_(stats), cache_(w1.dfa.num_letters()) {
    const Alphabet& ab = alphabet();
    allowed_.assign(std::size_t{w1.dfa.num_states()} * ab.num_output_moves(), 1);
    if (prune) {
      for (StateId s = 0; s < w1.dfa.num_states(); ++s)
        for (std::uint32_t y : ewin_agent_choices(w1, s)) allowed_[std::size_t{s} * ab.num_output_moves() + y] = 0;
    }
    init_ = intern(w1.dfa.init(), d2.initial());
  }

  const Alphabet& alphabet() const { return w1_.dfa.alphabet(); }
  std::size_t num_states() const { return pairs_.size(); }
  StateId initial() const { return init_; }

  StateId successor(StateId p, Letter a) {
    if (auto t = cache_.find(p, a)) return *t;
    auto [s1, s2] = pairs_[p];
    StateId t1 = w1_.dfa.next(s1, a);
    StateId t2 = d2_.successor(s2, a);
    StateId t = intern(t1, t2);
    cache_.store(p, a, t);
    return t;
  }
  std::optional<StateId> cached_successor(StateId p, Letter a) const { return cache_.find(p, a); }

  bool is_accepting(StateId p) const {
    return w1_.dfa.is_accepting(pairs_[p].first) && d2_.is_accepting(pairs_[p].second);
  }
  bool output_allowed(StateId p, std::uint32_t y) const {
    return allowed_[std::size_t{pairs_[p].first} * alphabet().num_output_moves() + y] != 0;
  }
  std::string describe(StateId p) const {
    return "(" + w1_.dfa.label(pairs_[p].first) + "," + d2_.describe(pairs_[p].second) + ")";
  }

 private:
  StateId intern(StateId s1, StateId s2) {
    std::uint64_t key = (std::uint64_t{s1} << 32) | s2;
    auto [it, fresh] = ids_.emplace(key, static_cast<StateId>(pairs_.size()));
    if (fresh) {
      if (pairs_.size() >= limits_.max_states) throw ResourceLimitError("pair state limit exceeded");
      pairs_.emplace_back(s1, s2);
      if (stats_ && w1_.is_ew(s1)) ++stats_->sink_pairs_entered;
    }
    return it->second;
  }

  const WinningRegionDfa& w1_;
  OtfDfa& d2_;
  Limits limits_;
  SearchStats* stats_;
  std::vector<std::uint8_t> allowed_;
  std::vector<std::pair<StateId, StateId>> pairs_;
  std::unordered_map<std::uint64_t, StateId> ids_;
  detail::SuccessorCache cache_;
  StateId init_ = 0;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

Formula conjunction_prefix(const std::vector<Formula>& conjuncts, std::size_t n) {
  return Formula::conj(std::vector<Formula>(conjuncts.begin(), conjuncts.begin() + static_cast<std::ptrdiff_t>(n)));
}

void check_strategy_ranks(const MooreStrategy& m) {
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (m.is_halting(s)) continue;
    for (std::uint32_t x = 0; x < m.alphabet.num_input_moves(); ++x)
      if (m.rank[m.next(s, x)] >= m.rank[s]) throw std::logic_error("strategy does not decrease the rank");
  }
}

}  // namespace

WinningRegionDfa tt_region(const Alphabet& alphabet) {
  ExplicitDfa g(alphabet);
  StateId init = g.add_state(false, "tt");
  StateId acc = g.add_state(true, "tt ;acc");
  for (Letter a = 0; a < g.num_letters(); ++a) {
    g.set_next(init, a, acc);
    g.set_next(acc, a, acc);
  }
  g.set_init(init);
  return WinningRegionDfa{std::move(g), std::nullopt};
}

std::optional<WinningRegionDfa> get_awr_explicit(const SynthesisSpec& spec, bool minimize, const Limits& limits) {
  ExplicitDfa g = expand_full(spec.phi, spec.alphabet, limits);
  GameResult r = solve_backward(g);
  if (!r.is_winning(g.init())) return std::nullopt;
  return build_awr(g, r, minimize);
}

std::optional<WinningRegionDfa> compose_individual(const WinningRegionDfa& w1, const SynthesisSpec& spec2,
                                                   const SearchOptions& options, SearchStats* stats) {
  check_alphabets(w1, spec2);
  auto w2 = get_awr_otf(spec2, options, stats);
  if (!w2) return std::nullopt;
  ExplicitDfa g = product(w1.dfa, w2->dfa);
  if (g.num_states() > options.limits.max_states) throw ResourceLimitError("product state limit exceeded");
  GameResult r = solve_backward(g);
  if (!r.is_winning(g.init())) return std::nullopt;
  return build_awr(g, r, options.minimize);
}

std::optional<WinningRegionDfa> compose_incremental(const WinningRegionDfa& w1, const SynthesisSpec& spec2,
                                                    const SearchOptions& options, SearchStats* stats) {
  check_alphabets(w1, spec2);
  OtfDfa d2(spec2.phi, spec2.alphabet, options.limits);
  PairArena arena(w1, d2, options.prune, options.limits, stats);
  detail::OtfSearch search(arena, true, options.descending, stats);
  search.run();
  if (!search.init_winning()) return std::nullopt;
  return search.build_region(options.minimize);
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Incremental: return "incremental";
    case Mode::Individual: return "individual";
    case Mode::Monolithic: return "monolithic";
  }
  return "?";
}

std::string to_string(Order o) { return o == Order::Given ? "given" : "size-asc"; }

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "incremental") return Mode::Incremental;
  if (s == "individual") return Mode::Individual;
  if (s == "monolithic") return Mode::Monolithic;
  return std::nullopt;
}

std::optional<Order> parse_order(std::string_view s) {
  if (s == "given") return Order::Given;
  if (s == "size-asc") return Order::SizeAsc;
  return std::nullopt;
}

std::string to_string(const Provenance& p) {
  switch (p.kind) {
    case Provenance::Kind::UnrealizableConjunct: return "conjunct:" + std::to_string(p.index);
    case Provenance::Kind::UnrealizableAfterComposing: return "composed:" + std::to_string(p.index);
    case Provenance::Kind::FullComposition: return "full";
  }
  return "?";
}

Verdict synthesize(const SynthesisSpec& spec, const SynthesisOptions& options) {
  check_prop_limit(spec.alphabet, options.limits);
  Verdict v;
  SearchOptions search;
  search.limits = options.limits;
  search.minimize = options.minimize;
  SearchStats sstats;

  std::optional<WinningRegionDfa> region;
  auto phase2_start = std::chrono::steady_clock::now();
  if (options.mode == Mode::Monolithic) {
    v.conjuncts = {spec.phi};
    v.stats.conjuncts = 1;
    region = get_awr_otf(spec, search, &sstats);
    if (region) v.stats.region_states.push_back(region->dfa.num_states());
  } else {
    v.conjuncts = decompose(spec.phi);
    if (options.order == Order::SizeAsc) {
      std::stable_sort(v.conjuncts.begin(), v.conjuncts.end(),
                       [](Formula a, Formula b) { return closure_size(a) < closure_size(b); });
    }
    const std::size_t n = v.conjuncts.size();
    v.stats.conjuncts = n;

    if (options.precheck) {
      auto start = std::chrono::steady_clock::now();
      std::vector<std::uint8_t> ok(n, 1);
      std::vector<std::exception_ptr> errors(n);
      std::vector<std::size_t> expanded(n, 0);
#pragma omp parallel for schedule(dynamic) if (options.parallel)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        auto k = static_cast<std::size_t>(i);
        try {
          SearchStats local;
          ok[k] = check_realizable_otf(SynthesisSpec{v.conjuncts[k], spec.alphabet}, search, &local);
          expanded[k] = local.expanded_states;
        } catch (...) {
          errors[k] = std::current_exception();
        }
      }
      v.stats.phase1_ms = elapsed_ms(start);
      for (std::size_t k = 0; k < n; ++k) {
        sstats.expanded_states += expanded[k];
        if (errors[k]) std::rethrow_exception(errors[k]);
        if (!ok[k]) {
          v.provenance = {Provenance::Kind::UnrealizableConjunct, k + 1};
          v.stats.expanded_states = sstats.expanded_states;
          return v;
        }
      }
    }

    phase2_start = std::chrono::steady_clock::now();
    region = tt_region(spec.alphabet);
    for (std::size_t k = 0; k < n; ++k) {
      SynthesisSpec conjunct{v.conjuncts[k], spec.alphabet};
      region = options.mode == Mode::Individual ? compose_individual(*region, conjunct, search, &sstats)
                                                : compose_incremental(*region, conjunct, search, &sstats);
      if (!region) {
        v.provenance = {Provenance::Kind::UnrealizableAfterComposing, k + 1};
        break;
      }
      v.stats.region_states.push_back(region->dfa.num_states());
      if (options.check_invariant && options.minimize) {
        auto expected = get_awr_explicit(SynthesisSpec{conjunction_prefix(v.conjuncts, k + 1), spec.alphabet}, true,
                                         options.limits);
        if (!expected || !expected->same_structure(*region))
          throw std::logic_error("composition invariant violated after conjunct " + std::to_string(k + 1));
      }
    }
  }
  v.stats.phase2_ms = elapsed_ms(phase2_start);
  v.stats.expanded_states = sstats.expanded_states;
  for (auto s : v.stats.region_states) v.stats.max_region_states = std::max(v.stats.max_region_states, s);

  if (!region) {
    if (options.mode == Mode::Monolithic) v.provenance = {Provenance::Kind::FullComposition, 0};
    return v;
  }

  auto start = std::chrono::steady_clock::now();
  MooreStrategy m = build_strategy(*region);
  check_strategy_ranks(m);
  if (options.verify) {
    auto check = verify_strategy(m, spec.phi, m.rank[m.init], options.parallel);
    if (!check) throw std::logic_error("strategy verification failed: " + check.reason);
  }
  v.stats.strategy_ms = elapsed_ms(start);
  v.stats.strategy_states = m.num_states();
  v.stats.init_rank = m.rank[m.init];
  v.realizable = true;
  v.provenance = {Provenance::Kind::FullComposition, 0};
  v.strategy = std::move(m);
  v.region = std::move(region);
  return v;
}

std::string stats_line(const Verdict& v, const SynthesisOptions& options) {
  std::ostringstream os;
  os << "mode=" << to_string(options.mode) << " order=" << to_string(options.order)
     << " conjuncts=" << v.stats.conjuncts << " realizable=" << (v.realizable ? 1 : 0)
     << " provenance=" << to_string(v.provenance) << " expanded_states=" << v.stats.expanded_states
     << " max_region_states=" << v.stats.max_region_states
     << " final_region_states=" << (v.region ? v.region->dfa.num_states() : 0)
     << " strategy_states=" << v.stats.strategy_states << " init_rank=" << v.stats.init_rank;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << " phase1_ms=" << v.stats.phase1_ms << " phase2_ms=" << v.stats.phase2_ms
     << " strategy_ms=" << v.stats.strategy_ms;
  return os.str();
}

}  // namespace ltlfsynth
