#include "ltlfsynth/random.hpp"

#include <functional>
#include <stdexcept>

namespace ltlfsynth {

namespace {
using R = RawFormula::Op;
constexpr R kUnary[] = {R::Not, R::Next, R::WeakNext, R::Finally, R::Globally};
constexpr R kBinary[] = {R::And, R::Or, R::Implies, R::Until, R::Release, R::And, R::Until};
}  // namespace

RawFormula RandomFormulaGenerator::leaf(unsigned num_props) {
  if (num_props == 0 || below(12) == 0) return RawFormula::leaf(below(2) ? R::True : R::False);
  return RawFormula::leaf(R::Prop, static_cast<unsigned>(below(num_props)));
}

RawFormula RandomFormulaGenerator::formula(unsigned num_props, unsigned size) {
  if (size <= 1) return leaf(num_props);
  if (size == 2 || below(3) == 0) {
    R op = kUnary[below(std::size(kUnary))];
    return RawFormula::unary(op, formula(num_props, size - 1));
  }
  R op = kBinary[below(std::size(kBinary))];
  auto left = static_cast<unsigned>(1 + below(size - 2));
  RawFormula l = formula(num_props, left);
  RawFormula r = formula(num_props, size - 1 - left);
  return RawFormula::binary(op, std::move(l), std::move(r));
}

RandomSpecText generate_random_spec(const RandomSpecParams& p) {
  if (p.conjuncts == 0 || p.size == 0 || p.outputs == 0)
    throw std::invalid_argument("conjuncts, size and outputs must be positive");
  std::vector<std::string> names;
  for (unsigned i = 0; i < p.inputs; ++i) names.push_back("i" + std::to_string(i));
  for (unsigned i = 0; i < p.outputs; ++i) names.push_back("o" + std::to_string(i));
  const unsigned nprops = p.inputs + p.outputs;

  std::function<bool(const RawFormula&)> mentions_output = [&](const RawFormula& f) {
    if (f.op == R::Prop && f.prop >= p.inputs) return true;
    for (const auto& k : f.kids)
      if (mentions_output(k)) return true;
    return false;
  };
  std::function<bool(RawFormula&, unsigned)> force_output = [&](RawFormula& f, unsigned out) {
    if (f.op == R::Prop || f.op == R::True || f.op == R::False) {
      f = RawFormula::leaf(R::Prop, out);
      return true;
    }
    for (auto& k : f.kids)
      if (force_output(k, out)) return true;
    return false;
  };

  RandomFormulaGenerator gen(p.seed);
  RandomSpecText out;
  for (unsigned c = 0; c < p.conjuncts; ++c) {
    RawFormula f = gen.formula(nprops, p.size);
    if (!mentions_output(f)) force_output(f, p.inputs + static_cast<unsigned>(gen.below(p.outputs)));
    if (c) out.formula += " && ";
    out.formula += to_string(f, names);
  }
  out.formula += '\n';

  out.partition = ".inputs:";
  for (unsigned i = 0; i < p.inputs; ++i) out.partition += " " + names[i];
  out.partition += "\n.outputs:";
  for (unsigned i = 0; i < p.outputs; ++i) out.partition += " " + names[p.inputs + i];
  out.partition += '\n';
  return out;
}

}  // namespace ltlfsynth
