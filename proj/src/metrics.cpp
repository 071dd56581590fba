#include "evosieve/metrics.hpp"

#include <cmath>
#include <numbers>

namespace evosieve {

double gaussian_heuristic(const Basis& b, DimConvention conv) {
  // Work with log2(det^2) to stay finite for huge determinants.
  double log2_det2 = log2_mpz(b.det_abs_sq());
  double n;  // effective dimension
  double log2_det;
  if (b.ring() == Ring::Integer) {
    n = static_cast<double>(b.dim());
    log2_det = 0.5 * log2_det2;  // det_abs_sq = det^2
  } else if (conv == DimConvention::RealDim) {
    // real lattice of dimension 2d; its determinant is |det|^2 exactly
    n = 2.0 * static_cast<double>(b.dim());
    log2_det = log2_det2;
  } else {
    n = static_cast<double>(b.dim());
    log2_det = 0.5 * log2_det2;  // |det| over the complex matrix
  }
  double log2_sigma = 0.5 * std::log2(n / (2.0 * std::numbers::pi * std::numbers::e)) +
                      log2_det / n;
  return std::exp2(log2_sigma);
}

double hadamard_ratio(const Basis& b) {
  const Basis emb = b.real_embedding();
  double d = static_cast<double>(emb.dim());
  // log2 det = 0.5*log2(det^2); log2 prod||b_j|| = 0.5 * sum log2 ||b_j||^2
  double log2_det = 0.5 * log2_mpz(emb.det_abs_sq());
  double log2_prod = 0;
  for (std::size_t j = 0; j < emb.dim(); ++j)
    log2_prod += 0.5 * log2_mpz(emb.column(j).norm_sq());
  double ratio = std::exp2((log2_det - log2_prod) / d);
  // Hadamard's inequality bounds this by 1; clamp roundoff.
  return ratio > 1.0 ? 1.0 : ratio;
}

double approx_factor(const mpz_class& best_norm_sq, double sigma) {
  if (sigma <= 0) throw std::domain_error("approx_factor: sigma must be > 0");
  return sqrt_mpz_to_double(best_norm_sq) / sigma;
}

double fitness(const LatticeVector& v) {
  if (v.is_zero()) throw std::domain_error("fitness of the zero vector");
  // 1/sqrt(norm_sq) in the log domain to survive huge norms
  double log2_norm = 0.5 * log2_mpz(v.norm_sq());
  return std::exp2(-log2_norm);
}

ExactSolver::ExactSolver(const Basis& b) : ring_(b.ring()), ring_dim_(b.dim()) {
  const Basis emb = b.real_embedding();
  n_ = emb.dim();
  lu_.assign(n_, std::vector<mpq_class>(n_, mpq_class(0)));
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) lu_[i][j] = mpq_class(emb.column(j)[i].re);
  perm_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;

  // Plain rational LU with row pivoting on the first nonzero entry.
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t p = k;
    while (p < n_ && sgn(lu_[p][k]) == 0) ++p;
    if (p == n_) throw SingularBasisError("solver hit a zero pivot");
    if (p != k) {
      std::swap(lu_[p], lu_[k]);
      std::swap(perm_[p], perm_[k]);
    }
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (sgn(lu_[i][k]) == 0) continue;
      mpq_class f = lu_[i][k] / lu_[k][k];
      lu_[i][k] = f;  // store the L factor in place
      for (std::size_t j = k + 1; j < n_; ++j) lu_[i][j] -= f * lu_[k][j];
    }
  }
}

std::optional<std::vector<RingScalar>> ExactSolver::solve(
    const LatticeVector& v) const {
  if (v.ring() != ring_) throw RingMismatchError("membership ring mismatch");
  if (v.dim() != ring_dim_)
    throw DimensionMismatchError("membership dimension mismatch");
  const LatticeVector ev = embed_vector(v);

  std::vector<mpq_class> y(n_);
  for (std::size_t i = 0; i < n_; ++i) y[i] = mpq_class(ev[perm_[i]].re);
  // forward substitution (unit lower factor)
  for (std::size_t i = 1; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j) y[i] -= lu_[i][j] * y[j];
  // back substitution
  for (std::size_t ii = n_; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n_; ++j) y[ii] -= lu_[ii][j] * y[j];
    y[ii] /= lu_[ii][ii];
  }

  for (const mpq_class& q : y)
    if (q.get_den() != 1) return std::nullopt;

  std::vector<RingScalar> coords;
  coords.reserve(ring_dim_);
  if (ring_ == Ring::Integer) {
    for (std::size_t j = 0; j < n_; ++j)
      coords.push_back(RingScalar::integer(y[j].get_num()));
  } else {
    for (std::size_t j = 0; j < ring_dim_; ++j)
      coords.push_back(
          RingScalar::gaussian(y[2 * j].get_num(), y[2 * j + 1].get_num()));
  }
  return coords;
}

std::optional<std::vector<RingScalar>> membership(const Basis& b,
                                                  const LatticeVector& v) {
  return ExactSolver(b).solve(v);
}

QualityReport quality_report(const Basis& b, const mpz_class& best_norm_sq,
                             DimConvention conv) {
  QualityReport r;
  r.convention = conv;
  r.sigma = gaussian_heuristic(b, conv);
  r.best_len = sqrt_mpz_to_double(best_norm_sq);
  r.alpha = approx_factor(best_norm_sq, r.sigma);
  r.hadamard = hadamard_ratio(b);
  return r;
}

}  // namespace evosieve
