#include "ltlfsynth/game.hpp"
#include "ltlfsynth/otf_dfa.hpp"
#include "otf_search.hpp"

namespace ltlfsynth {

namespace {

class FormulaArena {
 public:
  explicit FormulaArena(OtfDfa& dfa) : dfa_(dfa) {}

  const Alphabet& alphabet() const { return dfa_.alphabet(); }
  std::size_t num_states() const { return dfa_.num_states(); }
  StateId initial() const { return dfa_.initial(); }
  StateId successor(StateId s, Letter a) { return dfa_.successor(s, a); }
  std::optional<StateId> cached_successor(StateId s, Letter a) const { return dfa_.cached_successor(s, a); }
  bool is_accepting(StateId s) const { return dfa_.is_accepting(s); }
  bool output_allowed(StateId, std::uint32_t) const { return true; }
  std::string describe(StateId s) const { return dfa_.describe(s); }

 private:
  OtfDfa& dfa_;
};

}  // namespace

std::optional<WinningRegionDfa> get_awr_otf(const SynthesisSpec& spec, const SearchOptions& options,
                                            SearchStats* stats) {
  OtfDfa dfa(spec.phi, spec.alphabet, options.limits);
  FormulaArena arena(dfa);
  detail::OtfSearch search(arena, true, options.descending, stats);
  search.run();
  if (!search.init_winning()) return std::nullopt;
  return search.build_region(options.minimize);
}

bool check_realizable_otf(const SynthesisSpec& spec, const SearchOptions& options, SearchStats* stats) {
  OtfDfa dfa(spec.phi, spec.alphabet, options.limits);
  FormulaArena arena(dfa);
  detail::OtfSearch search(arena, false, options.descending, stats);
  search.run();
  return search.init_winning();
}

}  // namespace ltlfsynth
