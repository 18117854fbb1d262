#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ltlfsynth/compose.hpp"
#include "ltlfsynth/parser.hpp"
#include "ltlfsynth/random.hpp"

namespace ltlfsynth::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << content;
}

struct SynthConfig {
  std::string spec_path, part_path;
  std::string mode = "incremental", order = "given";
  bool skip_precheck = false, no_minimize = false, verify = false, stats = false;
  std::string dot_strategy, dot_dfa;
  std::size_t max_states = Limits{}.max_states;
};

void add_synth_options(CLI::App* cmd, SynthConfig& c) {
  cmd->add_option("spec", c.spec_path, "formula file")->required();
  cmd->add_option("part", c.part_path, "partition file (.inputs / .outputs)")->required();
  cmd->add_option("--mode", c.mode, "incremental | individual | monolithic")
      ->check(CLI::IsMember({"incremental", "individual", "monolithic"}));
  cmd->add_option("--order", c.order, "given | size-asc")->check(CLI::IsMember({"given", "size-asc"}));
  cmd->add_option("--max-states", c.max_states, "state bound per automaton")->check(CLI::PositiveNumber);
}

SynthesisOptions to_options(const SynthConfig& c) {
  SynthesisOptions o;
  o.mode = *parse_mode(c.mode);
  o.order = *parse_order(c.order);
  o.precheck = !c.skip_precheck;
  o.minimize = !c.no_minimize;
  o.verify = c.verify;
  o.limits.max_states = c.max_states;
  return o;
}

SynthesisSpec load_spec(const SynthConfig& c) {
  std::string formula = read_file(c.spec_path);
  std::string part = read_file(c.part_path);
  return make_spec(formula, parse_partition(part));
}

int run_synth(const SynthConfig& c, std::ostream& out) {
  SynthesisSpec spec = load_spec(c);
  SynthesisOptions options = to_options(c);
  Verdict v = synthesize(spec, options);
  out << (v.realizable ? "REALIZABLE" : "UNREALIZABLE") << "\n";
  out << "provenance=" << to_string(v.provenance) << "\n";
  if (c.stats) out << stats_line(v, options) << "\n";
  if (v.realizable) {
    if (!c.dot_strategy.empty()) {
      std::ostringstream ss;
      write_strategy_dot(ss, *v.strategy);
      write_file(c.dot_strategy, ss.str());
    }
    if (!c.dot_dfa.empty()) {
      std::ostringstream ss;
      write_dot(ss, v.region->dfa, v.region->ew);
      write_file(c.dot_dfa, ss.str());
    }
  }
  return v.realizable ? 0 : 1;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

int run_play(const SynthConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  SynthesisSpec spec = load_spec(c);
  Verdict v = synthesize(spec, to_options(c));
  if (!v.realizable) {
    err << "specification is unrealizable (provenance=" << to_string(v.provenance) << ")\n";
    return 1;
  }
  PlaySession session(*v.strategy);
  const Alphabet& ab = spec.alphabet;
  out << "inputs:";
  for (unsigned i = 0; i < ab.num_inputs(); ++i) out << " " << ab.names()[i];
  out << "\nenter the true inputs each round, 'quit' to stop\n";
  for (std::size_t round = 1;; ++round) {
    out << "round " << round << " agent: " << session.output_text() << "\n> " << std::flush;
    std::string line;
    for (;;) {
      if (!std::getline(in, line)) return 0;
      auto words = split_words(line);
      if (words.size() == 1 && words[0] == "quit") return 0;
      try {
        session.step(words);
        break;
      } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        out << "> " << std::flush;
      }
    }
    if (session.halted()) {
      out << "HALT\n";
      return 0;
    }
  }
}

int run_gen(const RandomSpecParams& p, const std::string& prefix, std::ostream& out) {
  RandomSpecText text = generate_random_spec(p);
  if (prefix.empty()) {
    out << text.formula << text.partition;
  } else {
    write_file(prefix + ".ltlf", text.formula);
    write_file(prefix + ".part", text.partition);
    out << prefix << ".ltlf\n" << prefix << ".part\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compositional LTLf synthesis"};
  app.require_subcommand(1);

  SynthConfig synth;
  auto* synth_cmd = app.add_subcommand("synth", "decide realizability and extract a strategy");
  add_synth_options(synth_cmd, synth);
  synth_cmd->add_flag("--skip-precheck", synth.skip_precheck, "skip the per-conjunct realizability check");
  synth_cmd->add_flag("--no-minimize", synth.no_minimize, "keep regions trimmed but unminimized");
  synth_cmd->add_flag("--verify", synth.verify, "replay the strategy against every input sequence");
  synth_cmd->add_flag("--stats", synth.stats, "print a key=value statistics line");
  synth_cmd->add_option("--dot-strategy", synth.dot_strategy, "write the strategy as DOT");
  synth_cmd->add_option("--dot-dfa", synth.dot_dfa, "write the final winning region as DOT");

  SynthConfig play;
  auto* play_cmd = app.add_subcommand("play", "play against the synthesized strategy");
  add_synth_options(play_cmd, play);

  RandomSpecParams gen;
  std::string gen_prefix;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random conjunctive specification");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--conjuncts", gen.conjuncts, "number of conjuncts")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--size", gen.size, "nodes per conjunct")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--inputs", gen.inputs, "number of inputs")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--outputs", gen.outputs, "number of outputs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen_prefix, "write PREFIX.ltlf and PREFIX.part instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*synth_cmd) return run_synth(synth, out);
    if (*play_cmd) return run_play(play, in, out, err);
    if (*gen_cmd) return run_gen(gen, gen_prefix, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ltlfsynth::cli
