#include "ltlfsynth/otf_dfa.hpp"

#include <algorithm>
#include <deque>

namespace ltlfsynth {

namespace {

class Progressor {
 public:
  explicit Progressor(Letter sigma) : sigma_(sigma) {}

  OtfState operator()(Formula f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    OtfState r = compute(f);
    memo_.emplace(f, r);
    return r;
  }

 private:
  OtfState compute(Formula f) {
    switch (f.op()) {
      case Op::True:
        return {Formula::tt(), true};
      case Op::False:
        return {Formula::ff(), false};
      case Op::Prop:
      case Op::NotProp: {
        bool v = ((sigma_ >> f.prop()) & 1u) == (f.op() == Op::Prop);
        return {v ? Formula::tt() : Formula::ff(), v};
      }
      case Op::And:
      case Op::Or: {
        const bool is_and = f.op() == Op::And;
        std::vector<Formula> kids;
        bool acc = is_and;
        for (auto c : f.children()) {
          OtfState r = (*this)(c);
          kids.push_back(r.residual);
          acc = is_and ? (acc && r.accepting) : (acc || r.accepting);
        }
        return {is_and ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids)), acc};
      }
      case Op::Next:
        return {f.operand(), false};
      case Op::WeakNext:
        return {f.operand(), true};
      case Op::Until: {
        // r | (l & X(l U r))
        OtfState r = (*this)(f.rhs());
        OtfState l = (*this)(f.lhs());
        return {Formula::disj(r.residual, Formula::conj(l.residual, f)), r.accepting};
      }
      case Op::Release: {
        // r & (l | N(l R r))
        OtfState r = (*this)(f.rhs());
        OtfState l = (*this)(f.lhs());
        return {Formula::conj(r.residual, Formula::disj(l.residual, f)), r.accepting};
      }
    }
    return {Formula::ff(), false};
  }

  Letter sigma_;
  std::unordered_map<Formula, OtfState> memo_;
};

using Clause = std::vector<Formula>;  // sorted by id

struct ById {
  bool operator()(Formula a, Formula b) const { return a.id() < b.id(); }
};

bool subset(const Clause& a, const Clause& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end(), ById{});
}

bool contradictory(const Clause& c) {
  for (Formula f : c) {
    if (f.op() != Op::Prop) continue;
    for (Formula g : c)
      if (g.op() == Op::NotProp && g.prop() == f.prop()) return true;
  }
  return false;
}

// drop duplicate and subsumed clauses
std::vector<Clause> reduce(std::vector<Clause> cs) {
  std::sort(cs.begin(), cs.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ById{});
  });
  std::vector<Clause> out;
  for (auto& c : cs) {
    bool absorbed = false;
    for (const auto& k : out)
      if ((absorbed = subset(k, c))) break;
    if (!absorbed) out.push_back(std::move(c));
  }
  return out;
}

/// Minimal disjunctive normal form over the non-Boolean subformulas. Two
/// residuals that are equal as positive Boolean combinations of those
/// atoms get the same formula, which keeps the state space finite.
class DnfBuilder {
 public:
  Formula operator()(Formula f) {
    std::vector<Formula> disjuncts;
    for (const auto& c : dnf(f)) disjuncts.push_back(Formula::conj(std::vector<Formula>(c.begin(), c.end())));
    return Formula::disj(std::move(disjuncts));
  }

 private:
  const std::vector<Clause>& dnf(Formula f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    std::vector<Clause> out;
    switch (f.op()) {
      case Op::True:
        out.push_back({});
        break;
      case Op::False:
        break;
      case Op::Or:
        for (Formula c : f.children()) {
          const auto& sub = dnf(c);
          out.insert(out.end(), sub.begin(), sub.end());
        }
        out = reduce(std::move(out));
        break;
      case Op::And: {
        out.push_back({});
        for (Formula c : f.children()) {
          const auto sub = dnf(c);
          std::vector<Clause> next;
          for (const auto& a : out) {
            for (const auto& b : sub) {
              Clause m;
              std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m), ById{});
              if (!contradictory(m)) next.push_back(std::move(m));
            }
          }
          out = reduce(std::move(next));
        }
        break;
      }
      default:
        out.push_back({f});
    }
    return memo_.emplace(f, std::move(out)).first->second;
  }

  std::unordered_map<Formula, std::vector<Clause>> memo_;
};

std::uint64_t key_of(const OtfState& s) { return (std::uint64_t{s.residual.id()} << 1) | s.accepting; }

}  // namespace

OtfState initial_state(Formula phi) { return {phi, false}; }

OtfState successor(const OtfState& s, Letter sigma) {
  OtfState next = Progressor(sigma)(s.residual);
  next.residual = DnfBuilder{}(next.residual);
  return next;
}

OtfDfa::OtfDfa(Formula phi, Alphabet alphabet, Limits limits)
    : phi_(phi), alphabet_(std::move(alphabet)), limits_(limits), cache_(alphabet_.num_letters()) {
  check_prop_limit(alphabet_, limits_);
  intern(initial_state(phi));
}

StateId OtfDfa::intern(const OtfState& s) {
  auto [it, fresh] = ids_.try_emplace(key_of(s), static_cast<StateId>(states_.size()));
  if (fresh) {
    if (states_.size() >= limits_.max_states) {
      ids_.erase(it);
      throw ResourceLimitError("state limit exceeded: more than max_states=" + std::to_string(limits_.max_states) +
                               " on-the-fly DFA states");
    }
    states_.push_back(s);
  }
  return it->second;
}

std::optional<StateId> OtfDfa::cached_successor(StateId s, Letter a) const { return cache_.find(s, a); }

StateId OtfDfa::successor(StateId s, Letter a) {
  if (auto hit = cache_.find(s, a)) return *hit;
  StateId t = intern(ltlfsynth::successor(states_[s], a));
  cache_.store(s, a, t);
  return t;
}

std::string OtfDfa::describe(StateId s) const {
  std::string out = to_string(states_[s].residual, alphabet_.names());
  if (states_[s].accepting) out += " ;acc";
  return out;
}

ExplicitDfa expand_full(Formula phi, const Alphabet& alphabet, const Limits& limits) {
  OtfDfa otf(phi, alphabet, limits);
  ExplicitDfa out(alphabet);
  out.add_state(otf.is_accepting(0), otf.describe(0));
  out.set_init(0);
  for (StateId s = 0; s < otf.num_states(); ++s) {
    for (Letter a = 0; a < alphabet.num_letters(); ++a) {
      StateId t = otf.successor(s, a);
      while (out.num_states() <= t) {
        auto id = static_cast<StateId>(out.num_states());
        out.add_state(otf.is_accepting(id), otf.describe(id));
      }
      out.set_next(s, a, t);
    }
  }
  return out;
}

}  // namespace ltlfsynth
