// Serial vs parallel timings for the OpenMP kernels.
//   bench_kernels [states] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ltlfsynth/compose.hpp"

using namespace ltlfsynth;

namespace {

template <class Fn>
double best_ms(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-16s serial %10.2f ms  parallel %10.2f ms  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "ok" : "MISMATCH");
}

// random complete game arena with a sparse accepting set
ExplicitDfa random_arena(std::size_t n, unsigned nin, unsigned nout, std::uint64_t seed) {
  std::vector<std::string> in, out;
  for (unsigned i = 0; i < nin; ++i) in.push_back("i" + std::to_string(i));
  for (unsigned i = 0; i < nout; ++i) out.push_back("o" + std::to_string(i));
  ExplicitDfa g(Alphabet(in, out));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < n; ++s) g.add_state(rng() % 50 == 0);
  for (StateId s = 0; s < n; ++s)
    for (Letter a = 0; a < g.num_letters(); ++a) g.set_next(s, a, static_cast<StateId>(rng() % n));
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
  std::printf("threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif

  ExplicitDfa g = random_arena(n, 2, 2, 7);
  GameResult rs, rp;
  double s = best_ms(repeats, [&] { rs = solve_backward(g, false); });
  double p = best_ms(repeats, [&] { rp = solve_backward(g, true); });
  row("solve_backward", s, p, rs.rank == rp.rank);

  ExplicitDfa ms, mp;
  s = best_ms(repeats, [&] { ms = minimize_moore(g, false); });
  p = best_ms(repeats, [&] { mp = minimize_moore(g, true); });
  row("minimize_moore", s, p, ms.same_structure(mp));

  std::string text;
  for (int k = 0; k < 3; ++k) {
    std::string i = "i" + std::to_string(k), o = "o" + std::to_string(k);
    text += (k ? " && " : "") + ("G (" + i + " -> N (" + o + " | N " + o + "))") + " && F (" + o + " U (" + o +
            " && X !" + o + "))" + " && G (" + i + " -> (" + o + " R !" + i + ") | F " + o + ")";
  }
  SynthesisSpec spec = make_spec(text, Alphabet({"i0", "i1", "i2"}, {"o0", "o1", "o2"}));
  SynthesisOptions so, po;
  so.parallel = false;
  Verdict vs, vp;
  s = best_ms(repeats, [&] { vs = synthesize(spec, so); });
  p = best_ms(repeats, [&] { vp = synthesize(spec, po); });
  row("synthesize", s, p, vs.realizable == vp.realizable);

  SynthesisSpec game = make_spec("G (i0 -> F o0) && G (i1 -> F o1) && F (o0 && o1 && X (!o0 && !o1))",
                                 Alphabet({"i0", "i1", "i2"}, {"o0", "o1"}));
  Verdict v = synthesize(game, {});
  if (v.realizable) {
    const MooreStrategy& m = *v.strategy;
    std::uint32_t depth = m.rank[m.init] + 6;
    bool okp = true, oks = true;
    s = best_ms(repeats, [&] { oks = verify_strategy(m, game.phi, depth, false).ok; });
    p = best_ms(repeats, [&] { okp = verify_strategy(m, game.phi, depth, true).ok; });
    row("verify_strategy", s, p, oks == okp);
  }
  return 0;
}
