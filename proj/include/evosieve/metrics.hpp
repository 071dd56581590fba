#pragma once

#include <optional>
#include <vector>

#include "evosieve/basis.hpp"

namespace evosieve {

// Dimension convention for Gaussian-ring heuristics: RealDim treats a rank-d
// module over Z[i] as the real lattice of dimension 2d it embeds into
// (the default); RingDim uses d directly.
enum class DimConvention { RealDim, RingDim };

// Gaussian-heuristic length sqrt(n / 2*pi*e) * det^(1/n) where n and det are
// taken in the chosen convention. Computed in the log domain, so it is safe
// for determinants far beyond double range.
double gaussian_heuristic(const Basis& b,
                          DimConvention conv = DimConvention::RealDim);

// (det L / prod ||b_j||)^(1/d) in (0, 1]; 1 iff orthogonal.
double hadamard_ratio(const Basis& b);

// sqrt(best_norm_sq) / sigma
double approx_factor(const mpz_class& best_norm_sq, double sigma);

// 1 / ||v||; fails on the zero vector.
double fitness(const LatticeVector& v);

// Exact membership test: solves B x = v over the rationals (LU over the real
// embedding, factored once) and accepts iff every coordinate is integral.
class ExactSolver {
 public:
  explicit ExactSolver(const Basis& b);
  // Ring coordinates of v in b, or nullopt when v is outside the lattice.
  std::optional<std::vector<RingScalar>> solve(const LatticeVector& v) const;

 private:
  Ring ring_;
  std::size_t ring_dim_;
  std::size_t n_;                            // embedded dimension
  std::vector<std::vector<mpq_class>> lu_;   // packed L\U factors
  std::vector<std::size_t> perm_;            // row permutation
};

std::optional<std::vector<RingScalar>> membership(const Basis& b,
                                                  const LatticeVector& v);

struct QualityReport {
  double sigma = 0;
  double best_len = 0;
  double alpha = 0;        // best_len / sigma
  double hadamard = 0;
  DimConvention convention = DimConvention::RealDim;
};

QualityReport quality_report(const Basis& b, const mpz_class& best_norm_sq,
                             DimConvention conv = DimConvention::RealDim);

}  // namespace evosieve
