#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "evosieve/basis.hpp"
#include "evosieve/rng.hpp"

namespace evosieve {

// mu = <u,v> / <u,u> as an exact complex rational (imaginary part 0 over Z).
ProjectionCoefficient projection_mu(const LatticeVector& u,
                                    const LatticeVector& v);

// t = v - round_nearest(mu) u; the offspring operator.
LatticeVector crossover(const LatticeVector& u, const LatticeVector& v);

// As crossover with mu scaled by xi before rounding; xi enters as the exact
// dyadic rational of the double, so everything after the draw stays exact.
LatticeVector mutated_crossover(const LatticeVector& u, const LatticeVector& v,
                                double xi);

// Sorted (norm ascending, canonical entry order as tie-break), deduplicated,
// zero-free vector set.
class Population {
 public:
  Population() = default;
  static Population from_vectors(std::vector<LatticeVector> vecs);

  bool contains(const LatticeVector& v) const {
    return keys_.count(v.canonical_key()) != 0;
  }
  bool contains_key(const std::string& key) const { return keys_.count(key) != 0; }
  // false (and no change) for the zero vector or a duplicate
  bool insert(LatticeVector v);

  const std::vector<LatticeVector>& members() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }
  const LatticeVector& operator[](std::size_t i) const { return sorted_[i]; }
  const LatticeVector& best() const { return sorted_.front(); }
  double mean_norm() const;

 private:
  std::vector<LatticeVector> sorted_;
  std::unordered_set<std::string> keys_;
};

struct StopRule {
  enum class Kind { Plateau, TargetNorm };
  Kind kind = Kind::Plateau;
  double target_norm = 0.0;     // TargetNorm: stop once best norm <= w
  double plateau_epsilon = 1.0; // Plateau: |mean_g - mean_{g-1}| < epsilon ...
  int plateau_streak = 3;       // ... for this many consecutive generations
};

struct SieveConfig {
  std::size_t pop_size = 0;
  double rho = 0.01;
  double mutation_prob = 0.0;
  double budget_exponent = 1.5;  // accepted children per generation < n^this
  StopRule stop;
  std::uint64_t seed = 1;
  bool include_basis_columns = true;
  std::size_t max_generations = 64;
  int threads = 1;  // >1 enables the deterministic parallel pair evaluation
};

struct GenerationReport {
  std::size_t generation = 0;
  mpz_class best_norm_sq;
  double best_norm = 0;
  double mean_norm = 0;
  std::size_t accepted_children = 0;
  std::size_t crossovers_attempted = 0;
  double elapsed_ms = 0;
};

struct SieveResult {
  LatticeVector best;
  Population final_population;
  std::vector<GenerationReport> history;
  bool converged = false;  // stop rule met before the generation cap
};

// The n smallest of the pool by (norm_sq, canonical tie-break); a pool
// smaller than n is returned whole. Pool entries must be nonzero.
Population elite_select(std::vector<LatticeVector> pool, std::size_t n);

// P = B C with C_{i,j} ~ Bernoulli(rho) per component (independent real and
// imaginary draws over Z[i]); zero or duplicate columns are resampled up to
// 32 times, then filled from basis columns and small random {0,1} combos.
// include_basis_columns inserts the d columns of B first, counting toward n.
Population init_population(const Basis& b, const SieveConfig& cfg);

// Difference sieve with global selection: every pass scans all ordered pairs
// of the current population, keeps children that are new and shorter than a
// parent, then retains the pool_capacity shortest of P union R; stops on an
// empty R. pool_capacity 0 selects the default of 2|P0| — the ordered scan
// emits children in +-/- pairs, so doubling the cap keeps as many sign
// classes alive as a |P0|-sized pool of sign-normalized vectors would.
SieveResult naive_sieve(Population p0, int threads = 1,
                        std::size_t max_iterations = 4096,
                        std::size_t pool_capacity = 0);

SieveResult genetic_sieve(const Basis& b, const SieveConfig& cfg);

// Same engine with an explicit starting population (2-D walkthrough etc.);
// cfg.rho and include_basis_columns are ignored.
SieveResult genetic_sieve_from(const Basis& b, const SieveConfig& cfg,
                               Population p0);

}  // namespace evosieve
