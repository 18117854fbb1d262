#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ltlfsynth/dfa.hpp"

namespace ltlfsynth {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

void write_dot(std::ostream& os, const ExplicitDfa& g, std::optional<StateId> ew) {
  os << "digraph dfa {\n  rankdir=LR;\n  init [shape=point];\n";
  for (StateId s = 0; s < g.num_states(); ++s) {
    std::string label = std::to_string(s);
    if (ew && *ew == s) label += "\\new";
    else if (!g.label(s).empty()) label += "\\n" + dot_escape(g.label(s));
    os << "  " << s << " [shape=" << (g.is_accepting(s) ? "doublecircle" : "circle") << ", label=\"" << label
       << "\"];\n";
  }
  os << "  init -> " << g.init() << ";\n";
  for (StateId s = 0; s < g.num_states(); ++s) {
    std::map<StateId, std::string> edges;
    for (Letter a = 0; a < g.num_letters(); ++a) {
      auto& lbl = edges[g.next(s, a)];
      if (!lbl.empty()) lbl += "\\n";
      lbl += g.alphabet().format_letter(a);
    }
    for (const auto& [t, lbl] : edges) os << "  " << s << " -> " << t << " [label=\"" << lbl << "\"];\n";
  }
  os << "}\n";
}

void write_dump(std::ostream& os, const ExplicitDfa& g, std::optional<StateId> ew) {
  os << "dfa " << g.num_states() << ' ' << g.init() << ' ' << g.alphabet().num_props() << '\n';
  for (StateId s = 0; s < g.num_states(); ++s) os << "state " << s << ' ' << (g.is_accepting(s) ? 1 : 0) << '\n';
  for (StateId s = 0; s < g.num_states(); ++s)
    for (Letter a = 0; a < g.num_letters(); ++a) os << "t " << s << ' ' << a << ' ' << g.next(s, a) << '\n';
  if (ew) os << "ew " << *ew << '\n';
}

DfaDump read_dump(std::istream& is, const Alphabet& alphabet) {
  auto fail = [](unsigned line, const std::string& msg) {
    throw std::invalid_argument("dfa dump line " + std::to_string(line) + ": " + msg);
  };
  DfaDump out{ExplicitDfa(alphabet), std::nullopt};
  std::string line;
  unsigned lineno = 0;
  std::size_t nstates = 0;
  bool header = false;
  std::vector<std::uint8_t> declared;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "dfa") {
      std::size_t init = 0, nprops = 0;
      if (header || !(ss >> nstates >> init >> nprops)) fail(lineno, "bad header");
      if (nprops != alphabet.num_props()) fail(lineno, "proposition count does not match the alphabet");
      if (nstates == 0 || init >= nstates) fail(lineno, "init out of range");
      for (std::size_t i = 0; i < nstates; ++i) out.dfa.add_state(false);
      out.dfa.set_init(static_cast<StateId>(init));
      declared.assign(nstates, 0);
      header = true;
    } else if (!header) {
      fail(lineno, "missing 'dfa' header");
    } else if (tag == "state") {
      std::size_t s = 0;
      int acc = 0;
      if (!(ss >> s >> acc) || s >= nstates || (acc != 0 && acc != 1)) fail(lineno, "bad state line");
      out.dfa.set_accepting(static_cast<StateId>(s), acc == 1);
      declared[s] = 1;
    } else if (tag == "t") {
      std::size_t s = 0, a = 0, t = 0;
      if (!(ss >> s >> a >> t) || s >= nstates || t >= nstates || a >= out.dfa.num_letters())
        fail(lineno, "bad transition line");
      out.dfa.set_next(static_cast<StateId>(s), static_cast<Letter>(a), static_cast<StateId>(t));
    } else if (tag == "ew") {
      std::size_t s = 0;
      if (!(ss >> s) || s >= nstates) fail(lineno, "bad ew line");
      out.ew = static_cast<StateId>(s);
    } else {
      fail(lineno, "unknown record '" + tag + "'");
    }
  }
  if (!header) throw std::invalid_argument("dfa dump: empty input");
  for (std::size_t s = 0; s < nstates; ++s)
    if (!declared[s]) throw std::invalid_argument("dfa dump: state " + std::to_string(s) + " not declared");
  if (!out.dfa.is_complete()) throw std::invalid_argument("dfa dump: transition table has holes");
  return out;
}

}  // namespace ltlfsynth
