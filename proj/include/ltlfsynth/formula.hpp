#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ltlfsynth {

/// Node kinds of an LTLf formula in negation normal form. Negation only
/// occurs on propositions (NotProp).
enum class Op : std::uint8_t {
  True,
  False,
  Prop,
  NotProp,
  And,
  Or,
  Next,      // strong next
  WeakNext,
  Until,
  Release,
};

namespace detail {
struct Node;
}

/// Handle to a hash-consed NNF formula. Structurally equal formulas share one
/// node, so equality and hashing are pointer operations. Every factory
/// returns a canonical formula: And/Or are flattened, constant-folded,
/// deduplicated and sorted, and have at least two children.
///
/// The intern table is process-global, thread-safe, and never shrinks.
class Formula {
 public:
  static Formula tt();
  static Formula ff();
  static Formula prop(unsigned index);
  static Formula not_prop(unsigned index);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula conj(Formula a, Formula b) { return conj(std::vector<Formula>{a, b}); }
  static Formula disj(Formula a, Formula b) { return disj(std::vector<Formula>{a, b}); }
  static Formula next(Formula f);
  static Formula weak_next(Formula f);
  static Formula until(Formula lhs, Formula rhs);
  static Formula release(Formula lhs, Formula rhs);
  /// F f, stored as tt U f.
  static Formula eventually(Formula f) { return until(tt(), f); }
  /// G f, stored as ff R f.
  static Formula globally(Formula f) { return release(ff(), f); }

  Op op() const;
  /// Proposition index; only meaningful for Prop / NotProp.
  unsigned prop() const;
  std::span<const Formula> children() const;
  Formula operand() const { return children()[0]; }
  Formula lhs() const { return children()[0]; }
  Formula rhs() const { return children()[1]; }

  /// Dense intern id, assigned in creation order.
  std::uint32_t id() const;

  bool is_true() const { return op() == Op::True; }
  bool is_false() const { return op() == Op::False; }
  bool is_literal() const { return op() == Op::Prop || op() == Op::NotProp; }
  bool is_temporal() const;

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }

  /// Number of nodes created so far in the intern table.
  static std::size_t interned_count();

 private:
  friend struct detail::Node;
  friend class InternTable;
  explicit Formula(const detail::Node* node) : node_(node) {}
  const detail::Node* node_;
};

namespace detail {
struct Node {
  Op op;
  std::uint32_t prop;
  std::vector<Formula> kids;
  std::uint32_t id;
  std::size_t hash;
};
}  // namespace detail

inline Op Formula::op() const { return node_->op; }
inline unsigned Formula::prop() const { return node_->prop; }
inline std::span<const Formula> Formula::children() const { return node_->kids; }
inline std::uint32_t Formula::id() const { return node_->id; }
inline bool Formula::is_temporal() const {
  auto o = op();
  return o == Op::Next || o == Op::WeakNext || o == Op::Until || o == Op::Release;
}

/// Total structural order used to sort And/Or children. It depends only on
/// formula structure, never on interning order, so canonical forms and
/// conjunct orders are reproducible across runs and threads.
int structural_compare(Formula a, Formula b);

/// Rebuilds f through the canonicalizing factories. Identity on any formula
/// already produced by them.
Formula canonicalize(Formula f);

/// Top-level conjuncts of f (f itself when f is not an And).
std::vector<Formula> decompose(Formula f);

/// One-step unfolding into next normal form:
/// l U r -> r | (l & X(l U r)),  l R r -> r & (l | N(l R r)).
Formula xnf(Formula f);

/// All distinct subformulas of f in post-order (children before parents).
std::vector<Formula> subformulas(Formula f);
inline std::size_t closure_size(Formula f) { return subformulas(f).size(); }

/// Props occurring in f, as a bitmask over proposition indices.
std::uint64_t prop_mask(Formula f);

/// Pretty-prints with the parser's surface syntax; tt U f and ff R f print as
/// F f and G f. Output re-parses to the same formula.
std::string to_string(Formula f, const std::vector<std::string>& names = {});

}  // namespace ltlfsynth

template <>
struct std::hash<ltlfsynth::Formula> {
  std::size_t operator()(ltlfsynth::Formula f) const noexcept { return std::hash<std::uint32_t>{}(f.id()); }
};
