// Serial vs OpenMP timings for the Gram-matrix and sum-one search kernels.
#include <omp.h>

#include <cstdio>
#include <functional>

#include <CLI11.hpp>

#include "w22/charges.hpp"
#include "w22/shapovalov.hpp"

using namespace w22;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    double t0 = omp_get_wtime();
    f();
    best = std::min(best, omp_get_wtime() - t0);
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"w22 kernel benchmark"};
  int level = 10, reps = 3, jobs = 0;
  long bound = 1000;
  app.add_option("--level", level, "vacuum Gram level")->capture_default_str();
  app.add_option("--bound", bound, "sum-one search bound")->capture_default_str();
  app.add_option("--reps", reps, "repetitions (best time kept)")->capture_default_str();
  app.add_option("--jobs", jobs, "OpenMP threads");
  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) omp_set_num_threads(jobs);
  std::printf("threads: %d\n", omp_get_max_threads());

  bool ok = true;
  for (const auto& [label, module] : {std::pair{"vacuum c=1", VermaModule::vacuum(Rational(1))},
                                      std::pair{"verma (1/2,1/3,-1/16)",
                                                VermaModule::verma({Rational(1, 2), Rational(1, 3), Rational(-1, 16)})}}) {
    int n = module.vacuum() ? level : level - 2;
    Matrix gs, gp;
    double ts = best_of(reps, [&] { gs = gram_serial(module, n).entries; });
    double tp = best_of(reps, [&] { gp = gram(module, n).entries; });
    char name[64];
    std::snprintf(name, sizeof name, "gram %s n=%d", label, n);
    report(name, ts, tp, gs == gp);
    ok = ok && gs == gp;
  }

  std::vector<PairSolution> ss, sp;
  double ts = best_of(reps, [&] { ss = solve_sum_one_serial(bound); });
  double tp = best_of(reps, [&] { sp = solve_sum_one(bound); });
  char name[64];
  std::snprintf(name, sizeof name, "solve_sum_one bound=%ld", bound);
  report(name, ts, tp, ss == sp);
  ok = ok && ss == sp;
  return ok ? 0 : 1;
}
