#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "ltlfsynth/dfa.hpp"

namespace ltlfsynth {

namespace {

/// Block structure for Hopcroft refinement: every block is a contiguous
/// slice of `elems`, and marked members sit at the front of their slice.
struct Partition {
  std::vector<StateId> elems;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> block_of;
  std::vector<std::uint32_t> start, end, marked;

  explicit Partition(std::size_t n) : elems(n), pos(n), block_of(n) {}

  std::uint32_t size(std::uint32_t b) const { return end[b] - start[b]; }
  std::uint32_t num_blocks() const { return static_cast<std::uint32_t>(start.size()); }

  void mark(StateId s) {
    std::uint32_t b = block_of[s];
    std::uint32_t target = start[b] + marked[b];
    StateId other = elems[target];
    std::swap(elems[pos[s]], elems[target]);
    pos[other] = pos[s];
    pos[s] = target;
    ++marked[b];
  }

  /// Splits off the marked prefix of b as a new block; returns its id, or
  /// none when everything or nothing was marked.
  std::optional<std::uint32_t> split(std::uint32_t b) {
    std::uint32_t m = marked[b];
    marked[b] = 0;
    if (m == 0 || m == size(b)) return std::nullopt;
    auto nb = num_blocks();
    start.push_back(start[b]);
    end.push_back(start[b] + m);
    marked.push_back(0);
    for (std::uint32_t i = start[b]; i < start[b] + m; ++i) block_of[elems[i]] = nb;
    start[b] += m;
    return nb;
  }
};

}  // namespace

ExplicitDfa minimize_hopcroft(const ExplicitDfa& input) {
  const ExplicitDfa g = trim_reachable(input);
  const std::size_t n = g.num_states();
  const std::uint32_t L = g.num_letters();

  // inverse transitions, CSR per letter
  std::vector<std::uint32_t> inv_start(std::size_t{L} * (n + 1), 0);
  std::vector<StateId> inv(std::size_t{L} * n);
  for (Letter a = 0; a < L; ++a) {
    auto* st = &inv_start[std::size_t{a} * (n + 1)];
    for (StateId s = 0; s < n; ++s) ++st[g.next(s, a) + 1];
    for (std::size_t t = 0; t < n; ++t) st[t + 1] += st[t];
    std::vector<std::uint32_t> fill(st, st + n);
    for (StateId s = 0; s < n; ++s) inv[std::size_t{a} * n + fill[g.next(s, a)]++] = s;
  }

  Partition part(n);
  std::uint32_t nacc = 0;
  for (StateId s = 0; s < n; ++s) nacc += g.is_accepting(s);
  {
    std::uint32_t front = 0, back = nacc;
    for (StateId s = 0; s < n; ++s) {
      std::uint32_t p = g.is_accepting(s) ? front++ : back++;
      part.elems[p] = s;
      part.pos[s] = p;
    }
    std::uint32_t acc_block = 0, rej_block = 0;
    if (nacc > 0) {
      part.start.push_back(0), part.end.push_back(nacc), part.marked.push_back(0);
      acc_block = 0;
    }
    if (nacc < n) {
      rej_block = part.num_blocks();
      part.start.push_back(nacc), part.end.push_back(static_cast<std::uint32_t>(n)), part.marked.push_back(0);
    }
    for (StateId s = 0; s < n; ++s) part.block_of[s] = g.is_accepting(s) ? acc_block : rej_block;
  }

  std::deque<std::pair<std::uint32_t, Letter>> work;
  std::vector<std::uint8_t> in_work;
  auto push = [&](std::uint32_t b, Letter a) {
    std::size_t key = std::size_t{b} * L + a;
    if (in_work.size() <= key) in_work.resize(std::size_t{part.num_blocks()} * L, 0);
    if (!in_work[key]) {
      in_work[key] = 1;
      work.emplace_back(b, a);
    }
  };
  if (part.num_blocks() == 2) {
    std::uint32_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
    for (Letter a = 0; a < L; ++a) push(smaller, a);
  }

  std::vector<StateId> splitter;
  std::vector<std::uint32_t> touched;
  while (!work.empty()) {
    auto [b, a] = work.front();
    work.pop_front();
    in_work[std::size_t{b} * L + a] = 0;

    splitter.clear();
    for (std::uint32_t i = part.start[b]; i < part.end[b]; ++i) {
      StateId t = part.elems[i];
      const auto* st = &inv_start[std::size_t{a} * (n + 1)];
      for (auto k = st[t]; k < st[t + 1]; ++k) splitter.push_back(inv[std::size_t{a} * n + k]);
    }
    touched.clear();
    for (StateId p : splitter) {
      std::uint32_t c = part.block_of[p];
      if (part.marked[c] == 0) touched.push_back(c);
      part.mark(p);
    }
    for (std::uint32_t c : touched) {
      auto d = part.split(c);
      if (!d) continue;
      for (Letter x = 0; x < L; ++x) {
        if (in_work.size() > std::size_t{c} * L + x && in_work[std::size_t{c} * L + x]) {
          push(*d, x);
        } else {
          push(part.size(*d) <= part.size(c) ? *d : c, x);
        }
      }
    }
  }
  return quotient(g, part.block_of);
}

ExplicitDfa minimize_moore(const ExplicitDfa& input, bool parallel) {
  const ExplicitDfa g = trim_reachable(input);
  const auto n = static_cast<std::int64_t>(g.num_states());
  const std::uint32_t L = g.num_letters();
  const std::size_t width = std::size_t{L} + 1;

  std::vector<std::uint32_t> cls(n);
  for (std::int64_t s = 0; s < n; ++s) cls[s] = g.is_accepting(static_cast<StateId>(s)) ? 1 : 0;
  std::size_t num_classes = 0;
  {
    bool any_acc = std::find(cls.begin(), cls.end(), 1u) != cls.end();
    bool any_rej = std::find(cls.begin(), cls.end(), 0u) != cls.end();
    num_classes = std::size_t{any_acc} + std::size_t{any_rej};
  }

  std::vector<std::uint32_t> sig(n * width);
  while (true) {
#if defined(LTLFSYNTH_HAVE_OPENMP)
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::int64_t s = 0; s < n; ++s) {
      auto* row = &sig[s * width];
      row[0] = cls[s];
      for (Letter a = 0; a < L; ++a) row[a + 1] = cls[g.next(static_cast<StateId>(s), a)];
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next_cls(n);
    for (std::int64_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> key(sig.begin() + s * width, sig.begin() + (s + 1) * width);
      auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
      next_cls[s] = it->second;
    }
    cls.swap(next_cls);
    if (ids.size() == num_classes) break;
    num_classes = ids.size();
  }
  (void)parallel;
  return quotient(g, cls);
}

}  // namespace ltlfsynth
