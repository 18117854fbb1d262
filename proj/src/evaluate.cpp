#include "ltlfsynth/evaluate.hpp"

#include <stdexcept>

namespace ltlfsynth {

TraceEvaluator::TraceEvaluator(Formula f) : order_(subformulas(f)) {
  std::unordered_map<Formula, std::size_t> index;
  for (std::size_t i = 0; i < order_.size(); ++i) index.emplace(order_[i], i);
  kid_index_.resize(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i)
    for (auto c : order_[i].children()) kid_index_[i].push_back(index.at(c));
}

bool TraceEvaluator::operator()(std::span<const Letter> trace) const {
  if (trace.empty()) throw std::invalid_argument("LTLf traces must be non-empty");
  const std::size_t n = trace.size();
  table_.assign(order_.size() * n, 0);
  auto at = [&](std::size_t sub, std::size_t pos) -> std::uint8_t& { return table_[sub * n + pos]; };

  for (std::size_t s = 0; s < order_.size(); ++s) {
    const Formula f = order_[s];
    const auto& k = kid_index_[s];
    switch (f.op()) {
      case Op::True:
        for (std::size_t i = 0; i < n; ++i) at(s, i) = 1;
        break;
      case Op::False:
        break;
      case Op::Prop:
        for (std::size_t i = 0; i < n; ++i) at(s, i) = (trace[i] >> f.prop()) & 1u;
        break;
      case Op::NotProp:
        for (std::size_t i = 0; i < n; ++i) at(s, i) = !((trace[i] >> f.prop()) & 1u);
        break;
      case Op::And:
        for (std::size_t i = 0; i < n; ++i) {
          std::uint8_t v = 1;
          for (auto c : k) v &= at(c, i);
          at(s, i) = v;
        }
        break;
      case Op::Or:
        for (std::size_t i = 0; i < n; ++i) {
          std::uint8_t v = 0;
          for (auto c : k) v |= at(c, i);
          at(s, i) = v;
        }
        break;
      case Op::Next:
        for (std::size_t i = 0; i + 1 < n; ++i) at(s, i) = at(k[0], i + 1);
        at(s, n - 1) = 0;
        break;
      case Op::WeakNext:
        for (std::size_t i = 0; i + 1 < n; ++i) at(s, i) = at(k[0], i + 1);
        at(s, n - 1) = 1;
        break;
      case Op::Until:
        at(s, n - 1) = at(k[1], n - 1);
        for (std::size_t i = n - 1; i-- > 0;) at(s, i) = at(k[1], i) | (at(k[0], i) & at(s, i + 1));
        break;
      case Op::Release:
        at(s, n - 1) = at(k[1], n - 1);
        for (std::size_t i = n - 1; i-- > 0;) at(s, i) = at(k[1], i) & (at(k[0], i) | at(s, i + 1));
        break;
    }
  }
  return at(order_.size() - 1, 0) != 0;
}

bool evaluate(std::span<const Letter> trace, Formula f) { return TraceEvaluator(f)(trace); }

}  // namespace ltlfsynth
