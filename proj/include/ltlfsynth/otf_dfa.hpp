#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "ltlfsynth/alphabet.hpp"
#include "ltlfsynth/dfa.hpp"
#include "ltlfsynth/formula.hpp"

namespace ltlfsynth {

namespace detail {

/// (state, letter) -> state memo. Dense rows for small alphabets, a hash map
/// otherwise.
class SuccessorCache {
 public:
  explicit SuccessorCache(std::uint32_t num_letters) : num_letters_(num_letters), dense_(num_letters <= 4096) {}

  std::optional<StateId> find(StateId s, Letter a) const {
    if (dense_) {
      if (s >= rows_.size() || rows_[s].empty() || rows_[s][a] == kNoState) return std::nullopt;
      return rows_[s][a];
    }
    auto it = sparse_.find((std::uint64_t{s} << 32) | a);
    if (it == sparse_.end()) return std::nullopt;
    return it->second;
  }

  void store(StateId s, Letter a, StateId t) {
    if (dense_) {
      if (rows_.size() <= s) rows_.resize(s + 1);
      if (rows_[s].empty()) rows_[s].assign(num_letters_, kNoState);
      rows_[s][a] = t;
    } else {
      sparse_.emplace((std::uint64_t{s} << 32) | a, t);
    }
  }

 private:
  std::uint32_t num_letters_;
  bool dense_;
  std::vector<std::vector<StateId>> rows_;
  std::unordered_map<std::uint64_t, StateId> sparse_;
};

}  // namespace detail

/// On-the-fly DFA state: the obligation left for the rest of the trace, plus
/// whether the letters read so far already form an accepted trace.
///
/// The bit is needed because the residual alone is ambiguous at the end of
/// a trace: X !p and N !p both leave !p behind, but only the weak one
/// accepts when the trace stops there.
struct OtfState {
  Formula residual;
  bool accepting;

  friend bool operator==(const OtfState&, const OtfState&) = default;
};

/// (phi, false): the empty trace is never accepted.
OtfState initial_state(Formula phi);

/// Unfolds the residual to next normal form, fixes every literal by `sigma`,
/// then reads X chi / N chi as chi for the residual and as false / true for
/// the bit.
OtfState successor(const OtfState& s, Letter sigma);

inline bool is_accepting(const OtfState& s) { return s.accepting; }

/// Lazily explored DFA of one formula with dense state ids (the initial
/// state is 0) and a per-instance successor cache. Not thread-safe; give
/// each solver its own instance.
class OtfDfa {
 public:
  OtfDfa(Formula phi, Alphabet alphabet, Limits limits = {});

  StateId initial() const { return 0; }
  StateId successor(StateId s, Letter a);
  /// The successor if it has been computed before.
  std::optional<StateId> cached_successor(StateId s, Letter a) const;

  const OtfState& state(StateId s) const { return states_[s]; }
  bool is_accepting(StateId s) const { return states_[s].accepting; }
  std::size_t num_states() const { return states_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  Formula formula() const { return phi_; }

  std::string describe(StateId s) const;

 private:
  StateId intern(const OtfState& s);

  Formula phi_;
  Alphabet alphabet_;
  Limits limits_;
  std::vector<OtfState> states_;
  std::unordered_map<std::uint64_t, StateId> ids_;
  detail::SuccessorCache cache_;
};

/// Breadth-first closure of the on-the-fly construction over every letter;
/// states are numbered in discovery order and labelled with their residual.
/// Throws ResourceLimitError when a proposition or state bound is exceeded.
ExplicitDfa expand_full(Formula phi, const Alphabet& alphabet, const Limits& limits = {});

}  // namespace ltlfsynth
