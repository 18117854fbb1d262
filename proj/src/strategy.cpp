#include "ltlfsynth/strategy.hpp"

#include <ostream>
#include <stdexcept>

#include "ltlfsynth/evaluate.hpp"

namespace ltlfsynth {

MooreStrategy build_strategy(const WinningRegionDfa& w, const GameResult& r) {
  const ExplicitDfa& g = w.dfa;
  if (!r.is_winning(g.init())) throw std::logic_error("build_strategy: initial state is not agent-winning");
  const Alphabet& ab = g.alphabet();
  const std::uint32_t nx = ab.num_input_moves(), ny = ab.num_output_moves();

  MooreStrategy m{ab, 0, {}, {}, {}, {}, {}};
  std::vector<StateId> id(g.num_states(), kNoState);
  for (StateId s = 0; s < g.num_states(); ++s) {
    if (w.is_ew(s)) continue;
    id[s] = static_cast<StateId>(m.region_state.size());
    m.region_state.push_back(s);
  }
  const std::size_t n = m.region_state.size();
  m.init = id[g.init()];
  m.output.assign(n, 0);
  m.halting.assign(n, 0);
  m.rank.assign(n, kInfiniteRank);
  m.trans.assign(n * nx, kNoState);

  for (StateId i = 0; i < n; ++i) {
    const StateId s = m.region_state[i];
    m.rank[i] = r.rank[s];
    if (g.is_accepting(s)) {
      m.halting[i] = 1;
      for (std::uint32_t y = 0; y < ny; ++y) {
        bool safe = true;
        for (std::uint32_t x = 0; x < nx && safe; ++x) safe = !w.is_ew(g.next(s, ab.letter(x, y)));
        if (safe) {
          m.output[i] = y;
          break;
        }
      }
      for (std::uint32_t x = 0; x < nx; ++x) m.trans[std::size_t{i} * nx + x] = i;
      continue;
    }
    if (!r.chosen_output[s]) throw std::logic_error("build_strategy: region state without a winning output");
    const std::uint32_t y = *r.chosen_output[s];
    m.output[i] = y;
    for (std::uint32_t x = 0; x < nx; ++x) {
      StateId t = id[g.next(s, ab.letter(x, y))];
      if (t == kNoState) throw std::logic_error("build_strategy: chosen output enters ew");
      m.trans[std::size_t{i} * nx + x] = t;
    }
  }
  return m;
}

MooreStrategy build_strategy(const WinningRegionDfa& w) { return build_strategy(w, solve_backward(w.dfa)); }

namespace {

struct Explorer {
  const MooreStrategy& m;
  Formula phi;
  std::uint32_t depth_bound;
  VerifyResult result;
  std::vector<std::uint32_t> inputs;
  std::vector<Letter> trace;

  void fail(std::string why) {
    result.ok = false;
    result.counterexample = inputs;
    result.reason = std::move(why);
  }

  // the play is at state s after trace.size() rounds
  void explore(StateId s) {
    if (!result.ok) return;
    if (m.is_halting(s)) {
      ++result.plays;
      if (trace.empty() || !evaluate(trace, phi)) fail("halting trace violates the formula");
      return;
    }
    if (trace.size() >= depth_bound) {
      ++result.plays;
      fail("no halt within " + std::to_string(depth_bound) + " rounds");
      return;
    }
    for (std::uint32_t x = 0; x < m.alphabet.num_input_moves() && result.ok; ++x) round(s, x);
  }

  void round(StateId s, std::uint32_t x) {
    inputs.push_back(x);
    trace.push_back(m.alphabet.letter(x, m.output[s]));
    explore(m.next(s, x));
    if (result.ok) {
      inputs.pop_back();
      trace.pop_back();
    }
  }
};

}  // namespace

VerifyResult verify_strategy(const MooreStrategy& m, Formula phi, std::uint32_t depth_bound, bool parallel) {
  if (m.is_halting(m.init)) {
    VerifyResult r;
    r.plays = 1;
    r.ok = false;
    r.reason = "initial state halts before any round";
    return r;
  }
  if (depth_bound == 0) {
    VerifyResult r;
    r.plays = 1;
    r.ok = false;
    r.reason = "no halt within 0 rounds";
    return r;
  }
  const std::int64_t nx = m.alphabet.num_input_moves();
  std::vector<VerifyResult> branch(static_cast<std::size_t>(nx));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t x = 0; x < nx; ++x) {
    Explorer e{m, phi, depth_bound, {}, {}, {}};
    e.round(m.init, static_cast<std::uint32_t>(x));
    branch[static_cast<std::size_t>(x)] = std::move(e.result);
  }
  VerifyResult out;
  for (auto& b : branch) {
    out.plays += b.plays;
    if (out.ok && !b.ok) {
      out.ok = false;
      out.counterexample = b.counterexample;
      out.reason = b.reason;
    }
  }
  return out;
}

StepResult play_step(const MooreStrategy& m, StateId current, std::uint32_t input) {
  if (m.is_halting(current)) throw std::logic_error("play has already halted");
  if (input >= m.alphabet.num_input_moves()) throw std::invalid_argument("input move out of range");
  StateId t = m.next(current, input);
  bool halted = m.is_halting(t);
  return StepResult{t, halted ? std::nullopt : std::optional<std::uint32_t>(m.output[t]), halted};
}

StepResult PlaySession::step(const std::vector<std::string>& names) {
  if (halted()) throw std::logic_error("play has already halted");
  const auto& table = m_.alphabet.prop_table();
  std::uint32_t x = 0;
  for (const auto& name : names) {
    auto p = table.find(name);
    if (!p || *p >= m_.alphabet.num_inputs()) throw std::invalid_argument("unknown input proposition '" + name + "'");
    x |= 1u << *p;
  }
  StepResult r = play_step(m_, current_, x);
  current_ = r.next;
  return r;
}

void write_strategy_dot(std::ostream& os, const MooreStrategy& m) {
  const Alphabet& ab = m.alphabet;
  os << "digraph strategy {\n  rankdir=LR;\n  start [shape=point];\n";
  for (StateId s = 0; s < m.num_states(); ++s) {
    os << "  s" << s << " [shape=" << (m.is_halting(s) ? "doublecircle" : "circle") << ", label=\"" << s << "\\n"
       << ab.format_outputs(m.output[s]) << "\"];\n";
  }
  os << "  start -> s" << m.init << ";\n";
  for (StateId s = 0; s < m.num_states(); ++s) {
    if (m.is_halting(s)) continue;
    for (std::uint32_t x = 0; x < ab.num_input_moves(); ++x)
      os << "  s" << s << " -> s" << m.next(s, x) << " [label=\"" << ab.format_inputs(x) << "\"];\n";
  }
  os << "}\n";
}

void write_strategy_table(std::ostream& os, const MooreStrategy& m) {
  const Alphabet& ab = m.alphabet;
  os << "init " << m.init << "\n";
  for (StateId s = 0; s < m.num_states(); ++s) {
    os << "state " << s << " out=" << ab.format_outputs(m.output[s]) << " halt=" << (m.is_halting(s) ? 1 : 0) << "\n";
    if (m.is_halting(s)) continue;
    for (std::uint32_t x = 0; x < ab.num_input_moves(); ++x)
      os << "on " << ab.format_inputs(x) << " -> " << m.next(s, x) << "\n";
  }
}

}  // namespace ltlfsynth
