// Serial reference vs OpenMP kernels on fixed inputs. Times are wall clock,
// best of `reps` runs.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "actionlab/automorphisms.hpp"
#include "actionlab/cochain.hpp"
#include "actionlab/fixed_point.hpp"
#include "actionlab/kernels.hpp"
#include "actionlab/zoo.hpp"

using namespace actionlab;

static double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

static void row(const char* name, double serial, double parallel) {
  std::printf("%-36s serial %9.4fs   omp %9.4fs   x%.2f\n", name, serial, parallel, serial / parallel);
}

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    Group g = zoo::heisenberg(5);  // order 125
    std::vector<Elem> t(g.table().begin(), g.table().end());
    double s = best_of(reps, [&] { kernels::serial::find_associativity_violation(t, g.order()); });
    double p = best_of(reps, [&] { kernels::find_associativity_violation(t, g.order()); });
    row("associativity, |G| = 125", s, p);
  }
  {
    Group g = zoo::abelian({3, 3, 3});
    auto gens = greedy_generators(Subgroup::whole(g));
    double s = best_of(reps, [&] { kernels::serial::automorphism_search(g, gens, 1 << 22); });
    double p = best_of(reps, [&] { kernels::automorphism_search(g, gens, 1 << 22); });
    row("automorphisms of (Z/3)^3", s, p);
  }
  {
    Group g = zoo::abelian({3, 3});
    IntMatrix d = bar_coboundary(g, 3);  // 4096 x 512
    double s = best_of(reps, [&] { serial::local_smith(d, 3, 1); });
    double p = best_of(reps, [&] { local_smith(d, 3, 1); });
    row("bar coboundary Smith form, 4096x512", s, p);
  }
  {
    double s = best_of(reps, [] { serial::exhaustive_roots_verify(3, 120); });
    double p = best_of(reps, [] { exhaustive_roots_verify(3, 120); });
    row("roots verification, n = 3, k <= 120", s, p);
  }
  return 0;
}
