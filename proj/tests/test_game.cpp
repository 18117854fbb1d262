#include <doctest.h>

#include <functional>
#include <random>
#include <sstream>

#include "ltlfsynth/compose.hpp"
#include "ltlfsynth/game.hpp"
#include "ltlfsynth/otf_dfa.hpp"
#include "ltlfsynth/random.hpp"
#include "oracle.hpp"

using namespace ltlfsynth;
using oracle::spec;

namespace {

ExplicitDfa arena(const SynthesisSpec& s) { return expand_full(s.phi, s.alphabet); }

// Exhaustive adversary: from s, playing chosen_output reaches an accepting
// state within `budget` rounds on every input branch.
bool forced_within(const ExplicitDfa& g, const GameResult& r, StateId s, std::uint32_t budget) {
  if (g.is_accepting(s)) return true;
  if (budget == 0 || !r.chosen_output[s]) return false;
  const Alphabet& ab = g.alphabet();
  for (std::uint32_t x = 0; x < ab.num_input_moves(); ++x)
    if (!forced_within(g, r, g.next(s, ab.letter(x, *r.chosen_output[s])), budget - 1)) return false;
  return true;
}

void check_all_or_nothing(const WinningRegionDfa& w) {
  const Alphabet& ab = w.dfa.alphabet();
  for (StateId s = 0; s < w.dfa.num_states(); ++s) {
    if (w.is_ew(s)) continue;
    for (std::uint32_t y = 0; y < ab.num_output_moves(); ++y) {
      std::uint32_t to_ew = 0;
      for (std::uint32_t x = 0; x < ab.num_input_moves(); ++x) to_ew += w.is_ew(w.dfa.next(s, ab.letter(x, y)));
      CHECK((to_ew == 0 || to_ew == ab.num_input_moves()));
    }
  }
}

SynthesisSpec random_spec(RandomFormulaGenerator& gen, unsigned max_in, unsigned max_out, unsigned max_size) {
  unsigned nin = static_cast<unsigned>(gen.below(max_in + 1));
  unsigned nout = 1 + static_cast<unsigned>(gen.below(max_out));
  std::vector<std::string> in, out;
  for (unsigned i = 0; i < nin; ++i) in.push_back("i" + std::to_string(i));
  for (unsigned i = 0; i < nout; ++i) out.push_back("o" + std::to_string(i));
  Alphabet ab(in, out);
  return make_spec(to_nnf(gen.formula(nin + nout, 1 + static_cast<unsigned>(gen.below(max_size)))), ab);
}

}  // namespace

TEST_CASE("backward solving examples") {
  SynthesisSpec fy = spec("F y", {"x"}, {"y"});
  ExplicitDfa g = arena(fy);
  GameResult r = solve_backward(g);
  CHECK(r.num_winning() == 2);
  CHECK(r.rank[g.init()] == 1);
  CHECK(r.chosen_output[g.init()] == 1u);
  CHECK(r.rank[1] == 0);
  CHECK_FALSE(r.chosen_output[1]);

  SynthesisSpec fx = spec("F x", {"x"}, {});
  GameResult rx = solve_backward(arena(fx));
  CHECK_FALSE(rx.is_winning(0));
  CHECK(rx.num_winning() == 1);

  ExplicitDfa acc(Alphabet({"x"}, {"y"}));
  acc.add_state(true);
  for (Letter a = 0; a < 4; ++a) acc.set_next(0, a, 0);
  CHECK(solve_backward(acc).rank[0] == 0);
}

TEST_CASE("parallel solver matches the serial reference on random tables") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    unsigned nin = static_cast<unsigned>(rng() % 3), nout = static_cast<unsigned>(rng() % 3);
    std::vector<std::string> in, out;
    for (unsigned k = 0; k < nin; ++k) in.push_back("i" + std::to_string(k));
    for (unsigned k = 0; k < nout; ++k) out.push_back("o" + std::to_string(k));
    ExplicitDfa g{Alphabet(in, out)};
    std::size_t n = 1 + rng() % 12;
    for (std::size_t s = 0; s < n; ++s) g.add_state(rng() % 5 == 0);
    for (StateId s = 0; s < n; ++s)
      for (Letter a = 0; a < g.num_letters(); ++a) g.set_next(s, a, static_cast<StateId>(rng() % n));
    GameResult ref = solve_backward_reference(g);
    GameResult par = solve_backward(g, true);
    GameResult ser = solve_backward(g, false);
    CHECK(par.rank == ref.rank);
    CHECK(par.chosen_output == ref.chosen_output);
    CHECK(ser.rank == ref.rank);
    CHECK(ser.chosen_output == ref.chosen_output);
    for (StateId s = 0; s < n; ++s) {
      CHECK(ref.is_winning(s) == (ref.rank[s] != kInfiniteRank));
      if (g.is_accepting(s)) CHECK(ref.rank[s] == 0);
      if (ref.is_winning(s) && !g.is_accepting(s)) {
        std::uint32_t worst = 0;
        for (std::uint32_t x = 0; x < g.alphabet().num_input_moves(); ++x)
          worst = std::max(worst, ref.rank[g.next(s, g.alphabet().letter(x, *ref.chosen_output[s]))]);
        CHECK(ref.rank[s] == worst + 1);
        CHECK(worst < n);
        CHECK(forced_within(g, ref, s, ref.rank[s]));
        if (ref.rank[s] > 0) CHECK_FALSE(forced_within(g, ref, s, ref.rank[s] - 1));
      }
    }
  }
}

TEST_CASE("winning region examples") {
  SynthesisSpec gy = spec("G y", {"x"}, {"y"});
  ExplicitDfa g = arena(gy);
  WinningRegionDfa w = build_awr(g, solve_backward(g));
  REQUIRE(w.ew);
  CHECK(w.dfa.num_states() == 3);
  CHECK(w.num_winning_states() == 2);
  const Alphabet& ab = gy.alphabet;
  for (StateId s = 0; s < 3; ++s)
    for (std::uint32_t x = 0; x < 2; ++x) {
      if (!w.is_ew(s)) CHECK(w.is_ew(w.dfa.next(s, ab.letter(x, 0))));
      if (!w.is_ew(s)) CHECK_FALSE(w.is_ew(w.dfa.next(s, ab.letter(x, 1))));
    }
  CHECK(ewin_agent_choices(w, w.dfa.init()) == std::vector<std::uint32_t>{0});
  CHECK(ewin_agent_choices(w, *w.ew) == std::vector<std::uint32_t>{0, 1});

  SynthesisSpec fy = spec("F y", {"x"}, {"y"});
  ExplicitDfa gf = arena(fy);
  WinningRegionDfa wf = build_awr(gf, solve_backward(gf));
  CHECK_FALSE(wf.ew);
  CHECK(wf.dfa.same_structure(minimize_hopcroft(gf)));
  for (std::uint32_t x = 0; x < 2; ++x) CHECK(wf.dfa.next(wf.dfa.init(), ab.letter(x, 0)) == wf.dfa.init());
  CHECK(ewin_agent_choices(wf, wf.dfa.init()).empty());

  ExplicitDfa gx = arena(spec("x", {"x"}, {"y"}));
  CHECK_THROWS_AS(build_awr(gx, solve_backward(gx)), std::logic_error);
}

TEST_CASE("on-the-fly region examples") {
  SynthesisSpec fy = spec("F y", {"x"}, {"y"});
  auto w = get_awr_otf(fy);
  REQUIRE(w);
  CHECK(w->num_winning_states() == 2);
  CHECK(w->same_structure(*get_awr_explicit(fy)));
  CHECK_FALSE(get_awr_otf(spec("F x", {"x"}, {})));
  auto wt = get_awr_otf(spec("tt", {"x"}, {"y"}));
  REQUIRE(wt);
  CHECK_FALSE(wt->ew);
  CHECK(wt->dfa.num_states() == 2);
  CHECK(wt->same_structure(tt_region(Alphabet({"x"}, {"y"}))));

  CHECK(check_realizable_otf(spec("G (x -> y)", {"x"}, {"y"})));
  CHECK_FALSE(check_realizable_otf(spec("x", {"x"}, {"y"})));
  CHECK(check_realizable_otf(spec("y", {"x"}, {"y"})));
  CHECK(check_realizable_otf(spec("tt", {}, {"y"})));
  CHECK_FALSE(check_realizable_otf(spec("ff", {}, {"y"})));

  Alphabet xy({"x"}, {"y"});
  CHECK(oracle::min_win_depth(make_spec("G (x -> y)", xy).phi, xy, 3) == 1u);
  CHECK_FALSE(oracle::min_win_depth(make_spec("x", xy).phi, xy, 2));
}

TEST_CASE("early termination explores no more than the full search") {
  SynthesisSpec s = spec("G (x -> N y) && F (y && X y)", {"x"}, {"y"});
  SearchStats early, full;
  CHECK(check_realizable_otf(s, {}, &early));
  CHECK(get_awr_otf(s, {}, &full));
  CHECK(early.expanded_states <= full.expanded_states);
  CHECK(early.explored_choices < full.explored_choices);
}

TEST_CASE("state guard") {
  SearchOptions o;
  o.limits.max_states = 3;
  CHECK_THROWS_AS(get_awr_otf(spec("G (x -> X X X y)", {"x"}, {"y"}), o), ResourceLimitError);
}

TEST_CASE("region export flags ew") {
  auto w = get_awr_otf(spec("G y", {"x"}, {"y"}));
  REQUIRE(w);
  std::stringstream dump;
  write_dump(dump, w->dfa, w->ew);
  DfaDump back = read_dump(dump, w->dfa.alphabet());
  CHECK(back.ew == w->ew);
  CHECK(back.dfa.same_structure(w->dfa));
  std::ostringstream dot;
  write_dot(dot, w->dfa, w->ew);
  CHECK(dot.str().find("\\new") != std::string::npos);
}

TEST_CASE("random specs: engines agree, regions behave") {
  RandomFormulaGenerator gen(99);
  int realizable = 0;
  for (int i = 0; i < 250; ++i) {
    SynthesisSpec s = random_spec(gen, 2, 2, 8);
    CAPTURE(to_string(s.phi, s.alphabet.names()));
    ExplicitDfa g = arena(s);
    GameResult r = solve_backward(g);
    const bool expected = r.is_winning(g.init());
    auto w = get_awr_otf(s);
    CHECK(w.has_value() == expected);
    CHECK(check_realizable_otf(s) == expected);
    SearchOptions desc;
    desc.descending = true;
    auto wd = get_awr_otf(s, desc);
    CHECK(check_realizable_otf(s, desc) == expected);
    CHECK(wd.has_value() == expected);

    auto depth = oracle::min_win_depth(s.phi, s.alphabet, 2);
    if (depth) CHECK(r.rank[g.init()] == *depth);
    else CHECK(r.rank[g.init()] > 2);
    if (!expected) continue;
    ++realizable;

    WinningRegionDfa explicit_w = build_awr(g, r);
    CHECK(w->same_structure(explicit_w));
    CHECK(wd->same_structure(explicit_w));
    check_all_or_nothing(*w);

    // agent-equivalence at the decidable level
    GameResult rw = solve_backward(w->dfa);
    for (StateId q = 0; q < w->dfa.num_states(); ++q) CHECK(rw.is_winning(q) == !w->is_ew(q));
    CHECK(rw.rank[w->dfa.init()] == r.rank[g.init()]);

    // unminimized regions have the same language
    SearchOptions raw;
    raw.minimize = false;
    auto wr = get_awr_otf(s, raw);
    REQUIRE(wr);
    CHECK(minimize_hopcroft(wr->dfa).same_structure(w->dfa));
  }
  CHECK(realizable > 20);
}
