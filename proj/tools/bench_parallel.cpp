// Compares the serial reference pair scan against the blocked OpenMP one on
// the same seeded instance and checks the histories are identical.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "evosieve/genesis.hpp"
#include "evosieve/metrics.hpp"
#include "evosieve/reduction.hpp"
#include "evosieve/report.hpp"
#include "evosieve/sieve.hpp"

using namespace evosieve;

namespace {

double run_once(const Basis& b, SieveConfig cfg, int threads,
                SieveResult* out) {
  cfg.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  *out = genetic_sieve(b, cfg);
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel sieve benchmark"};
  std::size_t dim = 30;
  std::size_t pop = 0;
  double rho = 0.01;
  std::uint64_t seed = 1;
  std::size_t max_generations = 25;
  int threads = 0;
  int repeats = 1;
  app.add_option("--dim", dim, "lattice dimension");
  app.add_option("--pop", pop, "population size (default 20*dim)");
  app.add_option("--rho", rho, "init density");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--max-generations", max_generations, "generation cap");
  app.add_option("--threads", threads, "parallel thread count (default: all)");
  app.add_option("--repeats", repeats, "timing repetitions");
  CLI11_PARSE(app, argc, argv);

  if (threads <= 0) {
#ifdef _OPENMP
    threads = omp_get_max_threads();
#else
    threads = 1;
#endif
  }
  if (pop == 0) pop = 20 * dim;

  GeneratorSpec spec;
  spec.dim = dim;
  spec.seed = seed;
  Basis b = lll(hnf(random_integral_basis(spec)),
                LLLParams{mpq_class(9999999, 10000000), 0,
                          LLLParams::Engine::Auto});

  SieveConfig cfg;
  cfg.pop_size = pop;
  cfg.rho = rho;
  cfg.seed = seed;
  cfg.max_generations = max_generations;

  std::printf("d=%zu n=%zu rho=%.4f seed=%llu generations<=%zu\n", dim, pop,
              rho, static_cast<unsigned long long>(seed), max_generations);

  SieveResult serial, parallel;
  double t_serial = 1e300, t_parallel = 1e300;
  for (int i = 0; i < repeats; ++i) {
    SieveResult r;
    t_serial = std::min(t_serial, run_once(b, cfg, 1, &r));
    if (i == 0) serial = std::move(r);
  }
  for (int i = 0; i < repeats; ++i) {
    SieveResult r;
    t_parallel = std::min(t_parallel, run_once(b, cfg, threads, &r));
    if (i == 0) parallel = std::move(r);
  }

  std::printf("serial:   %10.1f ms  (g=%zu best=%s)\n", t_serial,
              serial.history.size(), serial.best.norm_sq().get_str().c_str());
  std::printf("parallel: %10.1f ms  (threads=%d)  speedup %.2fx\n", t_parallel,
              threads, t_serial / t_parallel);

  std::string a = format_history_csv(serial.history, false);
  std::string c = format_history_csv(parallel.history, false);
  bool same = a == c && serial.best.canonical_key() == parallel.best.canonical_key();
  std::printf("histories: %s\n", same ? "identical" : "DIFFERENT");
  return same ? 0 : 1;
}
