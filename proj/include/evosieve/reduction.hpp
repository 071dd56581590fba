#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evosieve/basis.hpp"

namespace evosieve {

// Audit slack on floating Gram-Schmidt quantities (size/Lovasz checks), and
// the rank-collapse tolerance for detecting numerically dependent columns.
inline constexpr double kSizeTolerance = 1e-9;
inline constexpr double kRankTolerance = 1e-12;

struct LLLParams {
  // Lovasz constant as an exact rational; experiments use 1 - 10^-7.
  mpq_class delta = mpq_class(3, 4);
  long max_sweeps = 0;  // 0: default 64*d^2 outer iterations
  // Auto: exact rationals for d <= 8, incremental floating GSO above (with
  // exact fallback if the float path cannot stabilize its own audit).
  enum class Engine { Auto, Exact, Float } engine = Engine::Auto;
};

struct GramSchmidtData {
  std::vector<std::vector<mpf_class>> ortho;  // b*_k per column
  std::vector<std::vector<mpf_class>> mu;     // mu[k][j] valid for j < k
  std::vector<mpf_class> norms_sq;            // ||b*_k||^2
  unsigned long precision_bits = 0;
};

// Floating GSO of an Integer-ring basis at automatically chosen precision
// (grows with entry size so HNF-style huge columns stay accurate).
GramSchmidtData gram_schmidt(const Basis& b);

// Lagrange/Gauss reduction of two independent vectors (either ring, any
// ambient dimension). Returns (shorter, longer) with the projection
// coefficient reduced to |Re|,|Im| <= 1/2.
std::pair<LatticeVector, LatticeVector> gauss_reduce_2d(LatticeVector b1,
                                                        LatticeVector b2);

// LLL reduction. Integer bases come back with the same dimension. Gaussian
// bases are reduced through the norm-preserving real embedding, and the
// result is the reduced 2d-dimensional Integer basis of the same lattice.
Basis lll(const Basis& b, const LLLParams& params = {});

// Column-style Hermite normal form: lower triangular, positive diagonal,
// entries left of the diagonal reduced into [0, diagonal). Integer ring only.
Basis hnf(const Basis& b);

struct LLLAudit {
  bool size_reduced = false;
  bool lovasz = false;
  std::string detail;  // first violation, if any
  bool pass() const { return size_reduced && lovasz; }
};

// Independent exact-rational check of the LLL postconditions
// (|mu_{k,j}| <= 1/2 + tau and the Lovasz condition with relative slack tau).
// Deliberately self-contained: shares no GSO code with the engines above.
LLLAudit check_lll_postconditions(const Basis& b, const mpq_class& delta,
                                  double tau = kSizeTolerance);

}  // namespace evosieve
