#include <doctest.h>

#include <random>
#include <sstream>

#include "ltlfsynth/compose.hpp"
#include "ltlfsynth/evaluate.hpp"
#include "ltlfsynth/otf_dfa.hpp"
#include "ltlfsynth/random.hpp"
#include "ltlfsynth/strategy.hpp"
#include "oracle.hpp"

using namespace ltlfsynth;

namespace {

const Alphabet kXY({"x"}, {"y"});

struct Solved {
  SynthesisSpec spec;
  WinningRegionDfa region;
  MooreStrategy m;
};

Solved solve(std::string_view text, const Alphabet& ab = kXY) {
  SynthesisSpec s = make_spec(text, ab);
  auto w = get_awr_otf(s);
  REQUIRE(w);
  MooreStrategy m = build_strategy(*w);
  return {s, *w, m};
}

// every input path from s halts within `budget` rounds
bool halts_within(const MooreStrategy& m, StateId s, std::size_t budget) {
  if (m.is_halting(s)) return true;
  if (budget == 0) return false;
  for (std::uint32_t x = 0; x < m.alphabet.num_input_moves(); ++x)
    if (!halts_within(m, m.next(s, x), budget - 1)) return false;
  return true;
}

void check_invariants(const Solved& s) {
  const MooreStrategy& m = s.m;
  CHECK(m.rank[m.init] <= s.region.num_winning_states());
  for (StateId q = 0; q < m.num_states(); ++q) {
    auto losing = ewin_agent_choices(s.region, m.region_state[q]);
    // a halting state may have no safe output at all
    if (!m.is_halting(q) || losing.size() < m.alphabet.num_output_moves())
      CHECK(std::find(losing.begin(), losing.end(), m.output[q]) == losing.end());
    CHECK(halts_within(m, q, m.num_states()));
    CHECK(m.is_halting(q) == s.region.dfa.is_accepting(m.region_state[q]));
  }
}

}  // namespace

TEST_CASE("strategy for F y") {
  Solved s = solve("F y");
  const MooreStrategy& m = s.m;
  CHECK(m.output[m.init] == 1u);
  CHECK_FALSE(m.is_halting(m.init));
  for (std::uint32_t x = 0; x < 2; ++x) CHECK(m.is_halting(m.next(m.init, x)));
  CHECK(m.rank[m.init] == 1);
  check_invariants(s);

  StepResult r = play_step(m, m.init, 1);
  CHECK(r.halted);
  CHECK_FALSE(r.output);
  CHECK(m.is_halting(r.next));
  CHECK_THROWS_AS(play_step(m, r.next, 0), std::logic_error);
}

TEST_CASE("strategy for G(x -> y)") {
  Solved s = solve("G (x -> y)");
  for (StateId q = 0; q < s.m.num_states(); ++q)
    if (!s.m.is_halting(q)) CHECK(s.m.output[q] == 1u);
  for (std::uint32_t x = 0; x < 2; ++x) CHECK(s.m.is_halting(s.m.next(s.m.init, x)));
  CHECK(verify_strategy(s.m, s.spec.phi, 2));
  check_invariants(s);
}

TEST_CASE("strategy for tt picks the lowest output") {
  Solved s = solve("tt");
  CHECK(s.m.output[s.m.init] == 0u);
  CHECK(s.m.rank[s.m.init] == 1);
  for (std::uint32_t x = 0; x < 2; ++x) CHECK(s.m.is_halting(s.m.next(s.m.init, x)));
}

TEST_CASE("strategy for G y emits y every round") {
  Solved s = solve("G y");
  const MooreStrategy& m = s.m;
  StateId q = m.init;
  Trace trace;
  std::mt19937 rng(1);
  for (int round = 0; round < 5; ++round) {
    CHECK(m.output[q] == 1u);
    std::uint32_t x = rng() % 2;
    trace.push_back(kXY.letter(x, m.output[q]));
    CHECK(evaluate(trace, s.spec.phi));
    q = m.next(q, x);
  }
  PlaySession session(m);
  CHECK(session.output_text() == "y");
  StepResult r = session.step({"x"});
  CHECK(r.halted);
  CHECK_THROWS_AS(session.step({}), std::logic_error);
}

TEST_CASE("building from a losing region is rejected") {
  ExplicitDfa g = expand_full(make_spec("x", kXY).phi, kXY);
  GameResult r = solve_backward(g);
  WinningRegionDfa fake{g, std::nullopt};
  CHECK_THROWS_AS(build_strategy(fake, r), std::logic_error);
}

TEST_CASE("verification of F y1 && F y2") {
  Alphabet ab({"x"}, {"y1", "y2"});
  Solved s = solve("F y1 && F y2", ab);
  VerifyResult ok = verify_strategy(s.m, s.spec.phi, 3);
  CHECK(ok.ok);
  CHECK(ok.plays == 2);
  CHECK(verify_strategy(s.m, s.spec.phi, 3, false).ok);
  check_invariants(s);

  // corrupt the initial output to a losing choice
  MooreStrategy bad = s.m;
  auto losing = ewin_agent_choices(s.region, s.m.region_state[s.m.init]);
  if (losing.empty()) {
    bad.output[bad.init] = 0;
  } else {
    bad.output[bad.init] = losing.front();
  }
  VerifyResult caught = verify_strategy(bad, s.spec.phi, 3);
  CHECK_FALSE(caught.ok);
  CHECK_FALSE(caught.counterexample.empty());
  CHECK_FALSE(caught.reason.empty());
}

TEST_CASE("verification needs enough depth") {
  Solved s = solve("X X y");
  CHECK(s.m.rank[s.m.init] == 3);
  CHECK(verify_strategy(s.m, s.spec.phi, 3));
  VerifyResult shallow = verify_strategy(s.m, s.spec.phi, 2);
  CHECK_FALSE(shallow.ok);
  CHECK(shallow.counterexample.size() == 2);
}

TEST_CASE("empty input set gives a single play") {
  Solved s = solve("y && X !y", Alphabet({}, {"y"}));
  VerifyResult r = verify_strategy(s.m, s.spec.phi, 2);
  CHECK(r.ok);
  CHECK(r.plays == 1);
}

TEST_CASE("play session maps names") {
  Alphabet ab({"a", "b"}, {"y"});
  Solved s = solve("F (a -> y)", ab);
  PlaySession session(s.m);
  CHECK_THROWS_AS(session.step({"zz"}), std::invalid_argument);
  CHECK_THROWS_AS(session.step({"y"}), std::invalid_argument);
  CHECK_FALSE(session.halted());
  StepResult r = session.step({"a", "b"});
  CHECK(r.halted);
  CHECK(session.halted());
}

TEST_CASE("strategy exports") {
  Solved s = solve("F y");
  std::ostringstream table;
  write_strategy_table(table, s.m);
  CHECK(table.str() == "init 0\nstate 0 out=y halt=0\non !x -> 1\non x -> 1\nstate 1 out=!y halt=1\n");
  std::ostringstream dot;
  write_strategy_dot(dot, s.m);
  CHECK(dot.str().find("doublecircle") != std::string::npos);
  CHECK(dot.str().find("label=\"!x\"") != std::string::npos);
}

TEST_CASE("random specs: soundness and positional replay") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    RandomSpecParams p{seed, 1 + static_cast<unsigned>(seed % 2), 2 + static_cast<unsigned>(seed % 6), 2, 2};
    RandomSpecText t = generate_random_spec(p);
    SynthesisSpec spec = make_spec(t.formula, parse_partition(t.partition));
    auto w = get_awr_otf(spec);
    if (!w) continue;
    ++checked;
    Solved s{spec, *w, build_strategy(*w)};
    check_invariants(s);
    const MooreStrategy& m = s.m;
    CHECK(verify_strategy(m, spec.phi, m.rank[m.init]));

    // replay the positional strategy on the region and compare with play_step
    std::mt19937 rng(static_cast<unsigned>(seed));
    for (int play = 0; play < 5; ++play) {
      StateId region_state = w->dfa.init();
      StateId q = m.init;
      while (!m.is_halting(q)) {
        std::uint32_t y = m.output[q];
        CHECK(m.region_state[q] == region_state);
        std::uint32_t x = rng() % spec.alphabet.num_input_moves();
        region_state = w->dfa.next(region_state, spec.alphabet.letter(x, y));
        StepResult r = play_step(m, q, x);
        q = r.next;
        if (!r.halted) CHECK(r.output == m.output[q]);
      }
      CHECK(m.region_state[q] == region_state);
    }
  }
  CHECK(checked > 10);
}
