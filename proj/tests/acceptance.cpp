// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ltlfsynth/compose.hpp"
#include "ltlfsynth/evaluate.hpp"
#include "ltlfsynth/otf_dfa.hpp"
#include "ltlfsynth/random.hpp"
#include "oracle.hpp"

using namespace ltlfsynth;

namespace {

// pinned thresholds
constexpr double kExact = 1.0;
constexpr double kPruningShare = 0.90;
constexpr double kCriterion1Seconds = 60.0;

constexpr int kOracleFormulas = 500;
constexpr std::size_t kOracleTraceLen = 5;
constexpr int kProductPairs = 200;
constexpr std::size_t kProductTraceLen = 4;
constexpr int kEngineSpecs = 300;
constexpr int kComposePairs = 200;
constexpr int kDecomposableSpecs = 200;
constexpr int kMutations = 3;
constexpr int kPruningInstances = 50;

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << detail << std::endl;
  if (!pass) ++failures;
}

std::string pct(std::size_t ok, std::size_t total) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu/%zu (%.2f%%)", ok, total, total ? 100.0 * ok / total : 0.0);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

struct RandomFormula {
  RawFormula raw;
  Formula phi;
  Alphabet ab;
};

std::vector<std::string> prop_names(unsigned n) {
  std::vector<std::string> names{"a", "b", "c"};
  names.resize(n);
  return names;
}

RandomFormula random_formula(RandomFormulaGenerator& gen, unsigned nprops) {
  RawFormula raw = gen.formula(nprops, 1 + static_cast<unsigned>(gen.below(8)));
  Formula phi = to_nnf(raw);
  return {raw, phi, Alphabet::of_props(prop_names(nprops))};
}

Alphabet game_alphabet(unsigned nin, unsigned nout) {
  std::vector<std::string> in, out;
  for (unsigned i = 0; i < nin; ++i) in.push_back("i" + std::to_string(i));
  for (unsigned i = 0; i < nout; ++i) out.push_back("o" + std::to_string(i));
  return Alphabet(in, out);
}

SynthesisSpec random_game_spec(RandomFormulaGenerator& gen, const Alphabet& ab, unsigned max_size) {
  return make_spec(to_nnf(gen.formula(ab.num_props(), 1 + static_cast<unsigned>(gen.below(max_size)))), ab);
}

// Depth-first enumeration of traces up to max_len, carrying a DFA state.
template <class Fn>
void walk(const ExplicitDfa& g, std::size_t max_len, Fn&& fn) {
  Trace t;
  std::function<void(StateId)> rec = [&](StateId s) {
    for (Letter a = 0; a < g.num_letters(); ++a) {
      t.push_back(a);
      StateId n = g.next(s, a);
      fn(t, n);
      if (t.size() < max_len) rec(n);
      t.pop_back();
    }
  };
  rec(g.init());
}

void criteria_1_and_2() {
  auto start = std::chrono::steady_clock::now();
  RandomFormulaGenerator gen(20240601);
  std::size_t pairs = 0, agree = 0;
  std::size_t min_total = 0, min_ok = 0;
  for (int i = 0; i < kOracleFormulas; ++i) {
    unsigned nprops = 1 + static_cast<unsigned>(gen.below(3));
    RandomFormula f = random_formula(gen, nprops);
    ExplicitDfa g = expand_full(f.phi, f.ab);
    TraceEvaluator ev(f.phi);
    walk(g, kOracleTraceLen, [&](const Trace& t, StateId s) {
      ++pairs;
      bool want = oracle::holds(f.raw, t);
      if (g.is_accepting(s) == want && ev(t) == want) ++agree;
    });

    ExplicitDfa h = minimize_hopcroft(g);
    ExplicitDfa m = minimize_moore(g);
    bool ok = h.same_structure(m) && minimize_hopcroft(h).same_structure(h) && minimize_moore(m).same_structure(m) &&
              h.num_states() <= g.num_states();
    walk(g, kOracleTraceLen, [&](const Trace& t, StateId s) { ok = ok && accepts(h, t) == g.is_accepting(s); });
    ++min_total;
    min_ok += ok;
  }
  double secs = seconds_since(start);
  std::ostringstream d1;
  d1 << kOracleFormulas << " formulas (<=3 props, size <=8), traces <=" << kOracleTraceLen << ": " << pct(agree, pairs)
     << " (formula, trace) pairs agree; " << secs << " s (limit " << kCriterion1Seconds << " s)";
  report(1, "DFA-oracle equivalence", agree == pairs && pairs > 0 && secs < kCriterion1Seconds, d1.str());
  report(2, "Minimization cross-oracle", min_ok == min_total,
         pct(min_ok, min_total) + " automata: Hopcroft == Moore, idempotent, language kept on traces <=5");
}

void criterion_3() {
  RandomFormulaGenerator gen(31);
  std::size_t ok = 0, traces = 0;
  for (int i = 0; i < kProductPairs; ++i) {
    unsigned nprops = 1 + static_cast<unsigned>(gen.below(3));
    RandomFormula f1 = random_formula(gen, nprops), f2 = random_formula(gen, nprops);
    ExplicitDfa g1 = expand_full(f1.phi, f1.ab), g2 = expand_full(f2.phi, f2.ab);
    ExplicitDfa p = product(g1, g2);
    bool good = true;
    walk(p, kProductTraceLen, [&](const Trace& t, StateId s) {
      ++traces;
      bool want = oracle::holds(f1.raw, t) && oracle::holds(f2.raw, t);
      good = good && p.is_accepting(s) == want && (accepts(g1, t) && accepts(g2, t)) == want;
    });
    ok += good;
  }
  report(3, "Product property", ok == static_cast<std::size_t>(kProductPairs),
         pct(ok, kProductPairs) + " pairs, " + std::to_string(traces) + " traces <=4 checked against the intersection");
}

void criterion_4() {
  RandomFormulaGenerator gen(404);
  std::size_t ok = 0, realizable = 0;
  for (int i = 0; i < kEngineSpecs; ++i) {
    Alphabet ab = game_alphabet(static_cast<unsigned>(gen.below(3)), 1 + static_cast<unsigned>(gen.below(2)));
    SynthesisSpec s = random_game_spec(gen, ab, 8);
    ExplicitDfa g = expand_full(s.phi, s.alphabet);
    GameResult r = solve_backward(g);
    bool expected = r.is_winning(g.init());
    auto w = get_awr_otf(s);
    bool good = w.has_value() == expected && check_realizable_otf(s) == expected;
    if (good && expected) {
      ++realizable;
      good = w->same_structure(build_awr(g, r));
    }
    ok += good;
  }
  report(4, "Engine agreement", ok == static_cast<std::size_t>(kEngineSpecs),
         pct(ok, kEngineSpecs) + " specs (<=2 inputs, <=2 outputs), " + std::to_string(realizable) +
             " realizable with identical minimized regions");
}

void criterion_5() {
  RandomFormulaGenerator gen(505);
  std::size_t ok = 0, pairs = 0, nulls = 0, draws = 0;
  while (pairs < static_cast<std::size_t>(kComposePairs) && draws < 100000) {
    ++draws;
    Alphabet ab = game_alphabet(1 + static_cast<unsigned>(gen.below(2)), 1 + static_cast<unsigned>(gen.below(2)));
    SynthesisSpec s1 = random_game_spec(gen, ab, 6), s2 = random_game_spec(gen, ab, 6);
    auto w1 = get_awr_otf(s1);
    if (!w1 || !check_realizable_otf(s2)) continue;
    ++pairs;
    SynthesisSpec both{Formula::conj(s1.phi, s2.phi), ab};
    auto expected = get_awr_explicit(both);
    auto ind = compose_individual(*w1, s2);
    auto inc = compose_incremental(*w1, s2);
    bool mono = check_realizable_otf(both);
    bool good = ind.has_value() == expected.has_value() && inc.has_value() == expected.has_value() &&
                mono == expected.has_value();
    if (good && expected) good = ind->same_structure(*expected) && inc->same_structure(*expected);
    if (!expected) ++nulls;
    ok += good;
  }
  report(5, "Composition contract", ok == pairs && pairs == static_cast<std::size_t>(kComposePairs),
         pct(ok, pairs) + " realizable pairs (" + std::to_string(nulls) +
             " Null), both variants identical to the explicit minimized region");
}

struct ModeRun {
  std::size_t specs = 0, agree = 0;
  std::size_t split_cases = 0, split_ok = 0;
  std::size_t realizable_verdicts = 0, sound = 0;
  std::vector<std::pair<SynthesisSpec, Verdict>> realizable;
};

ModeRun criterion_6(std::size_t& counts_conjunct, std::size_t& counts_composed, std::size_t& counts_full) {
  ModeRun run;
  for (std::uint64_t seed = 1; run.specs < static_cast<std::size_t>(kDecomposableSpecs) && seed < 100000; ++seed) {
    RandomSpecParams p;
    p.seed = seed;
    p.conjuncts = 2 + static_cast<unsigned>(seed % 3);
    p.size = 1 + static_cast<unsigned>((seed / 3) % 6);
    p.inputs = 1 + static_cast<unsigned>((seed / 5) % 2);
    p.outputs = 1 + static_cast<unsigned>((seed / 7) % 2);
    RandomSpecText t = generate_random_spec(p);
    SynthesisSpec s = make_spec(t.formula, parse_partition(t.partition));
    std::size_t n = decompose(s.phi).size();
    if (n < 2 || n > 4) continue;
    ++run.specs;

    std::vector<Verdict> verdicts;
    for (Mode m : {Mode::Incremental, Mode::Individual, Mode::Monolithic}) {
      SynthesisOptions o;
      o.mode = m;
      verdicts.push_back(synthesize(s, o));
    }
    const Verdict& inc = verdicts[0];
    bool good = verdicts[1].realizable == inc.realizable && verdicts[2].realizable == inc.realizable &&
                verdicts[1].provenance == inc.provenance;
    // provenance consistency against the explicit pipeline
    switch (inc.provenance.kind) {
      case Provenance::Kind::UnrealizableConjunct:
        ++counts_conjunct;
        good = good && !get_awr_explicit(SynthesisSpec{inc.conjuncts[inc.provenance.index - 1], s.alphabet});
        break;
      case Provenance::Kind::UnrealizableAfterComposing: {
        ++counts_composed;
        std::vector<Formula> prefix(inc.conjuncts.begin(),
                                    inc.conjuncts.begin() + static_cast<std::ptrdiff_t>(inc.provenance.index));
        good = good && !get_awr_explicit(SynthesisSpec{Formula::conj(prefix), s.alphabet});
        for (Formula c : inc.conjuncts) good = good && get_awr_explicit(SynthesisSpec{c, s.alphabet}).has_value();
        break;
      }
      case Provenance::Kind::FullComposition:
        ++counts_full;
        good = good && inc.realizable && inc.strategy && get_awr_explicit(s).has_value();
        break;
    }
    run.agree += good;

    bool some_unrealizable = false;
    for (Formula c : inc.conjuncts) some_unrealizable |= !get_awr_explicit(SynthesisSpec{c, s.alphabet}).has_value();
    if (some_unrealizable) {
      ++run.split_cases;
      run.split_ok += !verdicts[2].realizable;
    }

    for (const Verdict& v : verdicts) {
      if (!v.realizable) continue;
      ++run.realizable_verdicts;
      const MooreStrategy& m = *v.strategy;
      run.sound += verify_strategy(m, s.phi, m.rank[m.init]).ok;
    }
    if (inc.realizable) run.realizable.emplace_back(s, inc);
  }
  return run;
}

void criteria_6_to_8() {
  std::size_t c1 = 0, c2 = 0, c3 = 0;
  ModeRun run = criterion_6(c1, c2, c3);
  report(6, "Mode agreement", run.agree == run.specs && run.specs == static_cast<std::size_t>(kDecomposableSpecs),
         pct(run.agree, run.specs) + " specs with 2-4 conjuncts; provenance conjunct/composed/full = " +
             std::to_string(c1) + "/" + std::to_string(c2) + "/" + std::to_string(c3));
  report(7, "Unrealizable conjunct implies unrealizable whole",
         run.split_ok == run.split_cases && run.split_cases > 0,
         pct(run.split_ok, run.split_cases) + " specs with an unrealizable conjunct rejected by the monolithic solver");

  // mutation tests: initial output replaced by a losing choice
  std::size_t caught = 0, attempted = 0;
  std::mt19937_64 rng(8);
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < run.realizable.size(); ++i) {
    const Verdict& v = run.realizable[i].second;
    if (!ewin_agent_choices(*v.region, v.strategy->region_state[v.strategy->init]).empty()) eligible.push_back(i);
  }
  for (int k = 0; k < kMutations && !eligible.empty(); ++k) {
    const auto& [s, v] = run.realizable[eligible[rng() % eligible.size()]];
    MooreStrategy bad = *v.strategy;
    auto losing = ewin_agent_choices(*v.region, bad.region_state[bad.init]);
    bad.output[bad.init] = losing[rng() % losing.size()];
    ++attempted;
    VerifyResult r = verify_strategy(bad, s.phi, bad.rank[bad.init]);
    caught += !r.ok && !r.reason.empty();
  }
  report(8, "Strategy soundness",
         run.sound == run.realizable_verdicts && run.realizable_verdicts > 0 && caught == attempted &&
             attempted == static_cast<std::size_t>(kMutations),
         pct(run.sound, run.realizable_verdicts) + " realizable verdicts verified to depth rank(init); mutations caught " +
             pct(caught, attempted));
}

void criterion_9() {
  Alphabet ab = game_alphabet(1, 3);
  SynthesisSpec g1 = make_spec("G o0", ab);
  WinningRegionDfa w1 = *get_awr_otf(g1);
  RandomFormulaGenerator gen(909);
  std::size_t smaller = 0, total = 0;
  SearchOptions ablation;
  ablation.prune = false;
  for (int i = 0; i < kPruningInstances; ++i) {
    SynthesisSpec s2 = random_game_spec(gen, ab, 6);
    SearchStats pruned, unpruned;
    auto a = compose_incremental(w1, s2, {}, &pruned);
    auto b = compose_incremental(w1, s2, ablation, &unpruned);
    ++total;
    bool same = a.has_value() == b.has_value() && (!a || a->same_structure(*b));
    if (same && pruned.expanded_states < unpruned.expanded_states) ++smaller;
  }
  report(9, "Incremental pruning effect", static_cast<double>(smaller) >= kPruningShare * static_cast<double>(total),
         pct(smaller, total) + " instances (G o0 with 3 outputs) expand strictly fewer pair states with pruning (required >= " +
             std::to_string(static_cast<int>(kPruningShare * 100)) + "%)");
}

void criterion_10() {
  struct Fixture {
    const char* formula;
    const char* verdict;
    const char* provenance;
    int code;
  };
  const Fixture fixtures[] = {{"y", "REALIZABLE", "provenance=full", 0},
                              {"x", "UNREALIZABLE", "provenance=conjunct:1", 1},
                              {"F x", "UNREALIZABLE", "provenance=conjunct:1", 1},
                              {"G (x -> y)", "REALIZABLE", "provenance=full", 0},
                              {"F y && G !y", "UNREALIZABLE", "provenance=composed:2", 1},
                              {"F x && G y", "UNREALIZABLE", "provenance=conjunct:1", 1}};
  std::string dir = std::filesystem::temp_directory_path() / "ltlfsynth_acceptance";
  std::filesystem::create_directories(dir);
  std::string part = dir + "/fixture.part";
  std::ofstream(part) << ".inputs: x\n.outputs: y\n";
  std::size_t ok = 0;
  std::string misses;
  for (const Fixture& f : fixtures) {
    std::string spec = dir + "/fixture.ltlf";
    std::ofstream(spec) << f.formula << "\n";
    std::istringstream in;
    std::ostringstream out, err;
    int code = cli::run({"synth", spec, part}, in, out, err);
    std::string expected = std::string(f.verdict) + "\n" + f.provenance + "\n";
    if (code == f.code && out.str() == expected) ++ok;
    else misses += std::string(" [") + f.formula + "]";
  }
  std::filesystem::remove_all(dir);
  report(10, "Named fixtures", ok == std::size(fixtures), pct(ok, std::size(fixtures)) + " exact verdict, provenance, exit code" + misses);
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criteria_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criteria_6_to_8();
  criterion_9();
  criterion_10();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << 10 - failures << "/10, " << seconds_since(start)
            << " s)" << std::endl;
  return failures ? 1 : 0;
}
