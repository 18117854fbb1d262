#include "ltlfsynth/raw_formula.hpp"

namespace ltlfsynth {

std::size_t RawFormula::size() const {
  std::size_t n = 1;
  for (const auto& k : kids) n += k.size();
  return n;
}

namespace {

using R = RawFormula::Op;

Formula nnf(const RawFormula& f, bool neg) {
  auto sub = [](const RawFormula& g, bool n) { return nnf(g, n); };
  switch (f.op) {
    case R::True:
      return neg ? Formula::ff() : Formula::tt();
    case R::False:
      return neg ? Formula::tt() : Formula::ff();
    case R::Prop:
      return neg ? Formula::not_prop(f.prop) : Formula::prop(f.prop);
    case R::Not:
      return sub(f.kids[0], !neg);
    case R::And:
    case R::Or: {
      bool as_and = (f.op == R::And) != neg;
      Formula l = sub(f.kids[0], neg);
      Formula r = sub(f.kids[1], neg);
      return as_and ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    case R::Implies:
      // a -> b == !a | b ; negated: a & !b
      if (neg) return Formula::conj(sub(f.kids[0], false), sub(f.kids[1], true));
      return Formula::disj(sub(f.kids[0], true), sub(f.kids[1], false));
    case R::Iff: {
      Formula a = sub(f.kids[0], false), na = sub(f.kids[0], true);
      Formula b = sub(f.kids[1], false), nb = sub(f.kids[1], true);
      if (neg) return Formula::disj(Formula::conj(a, nb), Formula::conj(na, b));
      return Formula::conj(Formula::disj(na, b), Formula::disj(nb, a));
    }
    case R::Next:
      return neg ? Formula::weak_next(sub(f.kids[0], true)) : Formula::next(sub(f.kids[0], false));
    case R::WeakNext:
      return neg ? Formula::next(sub(f.kids[0], true)) : Formula::weak_next(sub(f.kids[0], false));
    case R::Finally:
      return neg ? Formula::globally(sub(f.kids[0], true)) : Formula::eventually(sub(f.kids[0], false));
    case R::Globally:
      return neg ? Formula::eventually(sub(f.kids[0], true)) : Formula::globally(sub(f.kids[0], false));
    case R::Until:
      if (neg) return Formula::release(sub(f.kids[0], true), sub(f.kids[1], true));
      return Formula::until(sub(f.kids[0], false), sub(f.kids[1], false));
    case R::Release:
      if (neg) return Formula::until(sub(f.kids[0], true), sub(f.kids[1], true));
      return Formula::release(sub(f.kids[0], false), sub(f.kids[1], false));
  }
  return Formula::tt();
}

}  // namespace

Formula to_nnf(const RawFormula& f) { return nnf(f, false); }

std::string to_string(const RawFormula& f, const std::vector<std::string>& names) {
  auto unary = [&](const char* op) { return std::string(op) + "(" + to_string(f.kids[0], names) + ")"; };
  auto binary = [&](const char* op) {
    return "(" + to_string(f.kids[0], names) + " " + op + " " + to_string(f.kids[1], names) + ")";
  };
  switch (f.op) {
    case R::True:
      return "true";
    case R::False:
      return "false";
    case R::Prop:
      return f.prop < names.size() ? names[f.prop] : "p" + std::to_string(f.prop);
    case R::Not:
      return unary("!");
    case R::And:
      return binary("&&");
    case R::Or:
      return binary("||");
    case R::Implies:
      return binary("->");
    case R::Iff:
      return binary("<->");
    case R::Next:
      return unary("X");
    case R::WeakNext:
      return unary("N");
    case R::Finally:
      return unary("F");
    case R::Globally:
      return unary("G");
    case R::Until:
      return binary("U");
    case R::Release:
      return binary("R");
  }
  return "true";
}

}  // namespace ltlfsynth
