#include "ltlfsynth/dfa.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace ltlfsynth {

StateId ExplicitDfa::add_state(bool accepting, std::string label) {
  auto id = static_cast<StateId>(accepting_.size());
  accepting_.push_back(accepting);
  labels_.push_back(std::move(label));
  trans_.resize(trans_.size() + num_letters(), kNoState);
  return id;
}

bool ExplicitDfa::is_complete() const {
  if (init_ >= num_states()) return false;
  return std::all_of(trans_.begin(), trans_.end(), [&](StateId t) { return t < num_states(); });
}

bool ExplicitDfa::same_structure(const ExplicitDfa& o) const {
  return alphabet_ == o.alphabet_ && init_ == o.init_ && trans_ == o.trans_ && accepting_ == o.accepting_;
}

bool accepts(const ExplicitDfa& g, std::span<const Letter> trace) {
  StateId s = g.init();
  for (Letter a : trace) s = g.next(s, a);
  return g.is_accepting(s);
}

ExplicitDfa product(const ExplicitDfa& g1, const ExplicitDfa& g2) {
  if (!(g1.alphabet() == g2.alphabet())) throw std::invalid_argument("product: alphabet mismatch");
  ExplicitDfa out(g1.alphabet());
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto lookup = [&](StateId a, StateId b) {
    auto key = (std::uint64_t{a} << 32) | b;
    auto [it, fresh] = ids.try_emplace(key, static_cast<StateId>(out.num_states()));
    if (fresh) {
      out.add_state(g1.is_accepting(a) && g2.is_accepting(b),
                    "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      queue.emplace_back(a, b);
    }
    return it->second;
  };
  out.set_init(lookup(g1.init(), g2.init()));
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    StateId src = ids.at((std::uint64_t{a} << 32) | b);
    for (Letter l = 0; l < out.num_letters(); ++l) out.set_next(src, l, lookup(g1.next(a, l), g2.next(b, l)));
  }
  return out;
}

ExplicitDfa quotient(const ExplicitDfa& g, std::span<const std::uint32_t> block) {
  const auto nblocks = block.empty() ? 0u : *std::max_element(block.begin(), block.end()) + 1;
  std::vector<StateId> representative(nblocks, kNoState);
  for (StateId s = 0; s < g.num_states(); ++s)
    if (representative[block[s]] == kNoState) representative[block[s]] = s;

  ExplicitDfa out(g.alphabet());
  std::vector<StateId> renum(nblocks, kNoState);
  std::deque<std::uint32_t> queue;
  auto visit = [&](std::uint32_t b) {
    if (renum[b] == kNoState) {
      StateId rep = representative[b];
      renum[b] = out.add_state(g.is_accepting(rep), g.label(rep));
      queue.push_back(b);
    }
    return renum[b];
  };
  out.set_init(visit(block[g.init()]));
  while (!queue.empty()) {
    std::uint32_t b = queue.front();
    queue.pop_front();
    StateId rep = representative[b];
    StateId src = renum[b];
    for (Letter l = 0; l < g.num_letters(); ++l) out.set_next(src, l, visit(block[g.next(rep, l)]));
  }
  return out;
}

ExplicitDfa trim_reachable(const ExplicitDfa& g) {
  std::vector<std::uint32_t> identity(g.num_states());
  for (StateId s = 0; s < g.num_states(); ++s) identity[s] = s;
  return quotient(g, identity);
}

}  // namespace ltlfsynth
