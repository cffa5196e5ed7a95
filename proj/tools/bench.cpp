// Times the parallel kernels against their serial reference versions.

#include <chrono>
#include <cstdio>
#include <functional>

#include "octocf/octagon.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace octocf;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#endif
  octagon::TheoremOptions opt;
  opt.samples = 5;
  bool same = true;
  const double tp = seconds([&] { same &= octagon::verify_theorem(opt).ok(); }, 3);
  const double ts = seconds([&] { same &= octagon::verify_theorem_serial(opt).ok(); }, 3);
  std::printf("verify_theorem (35 samples): parallel %.4fs  serial %.4fs  speedup %.2fx\n", tp, ts, ts / tp);

  std::vector<farey::Direction> dirs;
  for (int j = 1; j <= 32; ++j) dirs.push_back(farey::Direction::from_u(QuadNum(Rational(1000003 * j + 17, 999983))));
  const double ep = seconds([&] { octagon::run_expansions(dirs, 20); }, 1);
  const double es = seconds([&] { octagon::run_expansions_serial(dirs, 20); }, 1);
  std::printf("run_expansions (32 x 20 steps): parallel %.4fs  serial %.4fs  speedup %.2fx\n", ep, es, es / ep);
  return same ? 0 : 1;
}
