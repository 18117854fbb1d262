#include "ltlfsynth/formula.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace ltlfsynth {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct NodePtrHash {
  std::size_t operator()(const detail::Node* n) const noexcept { return n->hash; }
};

struct NodePtrEq {
  bool operator()(const detail::Node* a, const detail::Node* b) const noexcept {
    return a->op == b->op && a->prop == b->prop && a->kids == b->kids;
  }
};

}  // namespace

class InternTable {
 public:
  static InternTable& instance() {
    static InternTable table;
    return table;
  }

  Formula make(Op op, std::uint32_t prop, std::vector<Formula> kids) {
    detail::Node probe{op, prop, std::move(kids), 0, 0};
    std::size_t h = mix(static_cast<std::size_t>(op), prop);
    for (auto k : probe.kids) h = mix(h, std::hash<const void*>{}(k.node_));
    probe.hash = h;

    std::lock_guard lock(mutex_);
    if (auto it = set_.find(&probe); it != set_.end()) return Formula(*it);
    probe.id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(std::move(probe));
    set_.insert(&nodes_.back());
    return Formula(&nodes_.back());
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return nodes_.size();
  }

 private:
  std::mutex mutex_;
  std::deque<detail::Node> nodes_;
  std::unordered_set<const detail::Node*, NodePtrHash, NodePtrEq> set_;
};

namespace {

Formula make(Op op, std::uint32_t prop = 0, std::vector<Formula> kids = {}) {
  return InternTable::instance().make(op, prop, std::move(kids));
}

Formula make_nary(Op op, std::vector<Formula> children) {
  const bool is_and = op == Op::And;
  const Op absorbing = is_and ? Op::False : Op::True;
  const Op neutral = is_and ? Op::True : Op::False;

  std::vector<Formula> flat;
  flat.reserve(children.size());
  for (auto c : children) {
    if (c.op() == absorbing) return c;
    if (c.op() == neutral) continue;
    if (c.op() == op) {
      // children of a canonical node are already flat and constant-free
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(c);
    }
  }
  std::sort(flat.begin(), flat.end(), [](Formula a, Formula b) { return structural_compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return is_and ? Formula::tt() : Formula::ff();
  if (flat.size() == 1) return flat.front();
  return make(op, 0, std::move(flat));
}

}  // namespace

Formula Formula::tt() {
  static const Formula f = make(Op::True);
  return f;
}

Formula Formula::ff() {
  static const Formula f = make(Op::False);
  return f;
}

Formula Formula::prop(unsigned index) { return make(Op::Prop, index); }
Formula Formula::not_prop(unsigned index) { return make(Op::NotProp, index); }
Formula Formula::conj(std::vector<Formula> children) { return make_nary(Op::And, std::move(children)); }
Formula Formula::disj(std::vector<Formula> children) { return make_nary(Op::Or, std::move(children)); }

Formula Formula::next(Formula f) {
  if (f.is_false()) return f;
  return make(Op::Next, 0, {f});
}

Formula Formula::weak_next(Formula f) {
  if (f.is_true()) return f;
  return make(Op::WeakNext, 0, {f});
}

Formula Formula::until(Formula lhs, Formula rhs) {
  if (rhs.is_true() || rhs.is_false() || lhs.is_false()) return rhs;
  return make(Op::Until, 0, {lhs, rhs});
}

Formula Formula::release(Formula lhs, Formula rhs) {
  if (rhs.is_true() || rhs.is_false() || lhs.is_true()) return rhs;
  return make(Op::Release, 0, {lhs, rhs});
}

std::size_t Formula::interned_count() { return InternTable::instance().size(); }

int structural_compare(Formula a, Formula b) {
  if (a == b) return 0;
  if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
  if (a.prop() != b.prop()) return a.prop() < b.prop() ? -1 : 1;
  auto ka = a.children();
  auto kb = b.children();
  for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i)
    if (int c = structural_compare(ka[i], kb[i])) return c;
  if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
  return 0;  // unreachable for interned nodes
}

Formula canonicalize(Formula f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Prop:
    case Op::NotProp:
      return f;
    case Op::And:
    case Op::Or: {
      std::vector<Formula> kids;
      for (auto c : f.children()) kids.push_back(canonicalize(c));
      return f.op() == Op::And ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    case Op::Next:
      return Formula::next(canonicalize(f.operand()));
    case Op::WeakNext:
      return Formula::weak_next(canonicalize(f.operand()));
    case Op::Until:
      return Formula::until(canonicalize(f.lhs()), canonicalize(f.rhs()));
    case Op::Release:
      return Formula::release(canonicalize(f.lhs()), canonicalize(f.rhs()));
  }
  return f;
}

std::vector<Formula> decompose(Formula f) {
  if (f.op() != Op::And) return {f};
  return {f.children().begin(), f.children().end()};
}

Formula xnf(Formula f) {
  switch (f.op()) {
    case Op::And:
    case Op::Or: {
      std::vector<Formula> kids;
      for (auto c : f.children()) kids.push_back(xnf(c));
      return f.op() == Op::And ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    case Op::Until:
      return Formula::disj(xnf(f.rhs()), Formula::conj(xnf(f.lhs()), Formula::next(f)));
    case Op::Release:
      return Formula::conj(xnf(f.rhs()), Formula::disj(xnf(f.lhs()), Formula::weak_next(f)));
    default:
      return f;
  }
}

std::vector<Formula> subformulas(Formula f) {
  std::vector<Formula> order;
  std::unordered_set<Formula> seen;
  // iterative post-order over the DAG
  std::vector<std::pair<Formula, std::size_t>> stack{{f, 0}};
  if (!seen.insert(f).second) return order;
  while (!stack.empty()) {
    auto& [node, next_child] = stack.back();
    if (next_child < node.children().size()) {
      Formula c = node.children()[next_child++];
      if (seen.insert(c).second) stack.emplace_back(c, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

std::uint64_t prop_mask(Formula f) {
  std::uint64_t mask = 0;
  for (auto s : subformulas(f))
    if (s.is_literal()) mask |= std::uint64_t{1} << s.prop();
  return mask;
}

namespace {

int precedence(Formula f) {
  switch (f.op()) {
    case Op::Or:
      return 1;
    case Op::And:
      return 2;
    case Op::Until:
    case Op::Release:
      return 3;
    default:
      return 4;
  }
}

void print(Formula f, const std::vector<std::string>& names, std::string& out);

void print_child(Formula c, int parent_prec, std::string& out, const std::vector<std::string>& names,
                 bool strict) {
  int p = precedence(c);
  bool parens = strict ? p <= parent_prec : p < parent_prec;
  if (parens) out += '(';
  print(c, names, out);
  if (parens) out += ')';
}

void print(Formula f, const std::vector<std::string>& names, std::string& out) {
  auto prop_name = [&](unsigned i) {
    return i < names.size() ? names[i] : "p" + std::to_string(i);
  };
  switch (f.op()) {
    case Op::True:
      out += "true";
      return;
    case Op::False:
      out += "false";
      return;
    case Op::Prop:
      out += prop_name(f.prop());
      return;
    case Op::NotProp:
      out += '!' + prop_name(f.prop());
      return;
    case Op::And:
    case Op::Or: {
      const char* sep = f.op() == Op::And ? " & " : " | ";
      bool first = true;
      for (auto c : f.children()) {
        if (!first) out += sep;
        first = false;
        print_child(c, precedence(f), out, names, false);
      }
      return;
    }
    case Op::Next:
    case Op::WeakNext:
      out += f.op() == Op::Next ? "X " : "N ";
      print_child(f.operand(), 4, out, names, false);
      return;
    case Op::Until:
    case Op::Release:
      if (f.op() == Op::Until && f.lhs().is_true()) {
        out += "F ";
        print_child(f.rhs(), 4, out, names, false);
        return;
      }
      if (f.op() == Op::Release && f.lhs().is_false()) {
        out += "G ";
        print_child(f.rhs(), 4, out, names, false);
        return;
      }
      // right-associative: parenthesize a same-level left operand
      print_child(f.lhs(), 3, out, names, true);
      out += f.op() == Op::Until ? " U " : " R ";
      print_child(f.rhs(), 3, out, names, false);
      return;
  }
}

}  // namespace

std::string to_string(Formula f, const std::vector<std::string>& names) {
  std::string out;
  print(f, names, out);
  return out;
}

}  // namespace ltlfsynth
