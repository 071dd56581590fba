#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace evosieve {

// Deterministic splitmix64 stream. Substreams are derived from the root seed
// and two labels, so independent work units (basis columns, crossover pairs)
// can draw randomness in any order and still reproduce the serial run:
//   substream(a, b) seeds a fresh stream with
//   mix(seed ^ mix(a ^ GOLDEN) ^ mix(b ^ 2*GOLDEN))
// where mix is the splitmix64 output function and GOLDEN = 0x9e3779b97f4a7c15.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();            // one splitmix64 step
  double next_unit();              // uniform in [0,1), 53 random bits
  bool bernoulli(double p);        // consumes exactly one draw
  // Standard Box-Muller (cosine branch only); consumes exactly two draws.
  double normal(double mean, double stddev);
  // Uniform over the integers in [-bound, bound], by rejection sampling from
  // the next power of two. bound must be positive.
  mpz_class uniform_mpz(const mpz_class& bound);
  // Uniform in {0, 1, ..., n-1}; n must be positive. Rejection from 2^k.
  std::uint64_t uniform_below(std::uint64_t n);

  Rng substream(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;   // construction-time seed (substream derivation base)
  std::uint64_t state_;
};

}  // namespace evosieve
