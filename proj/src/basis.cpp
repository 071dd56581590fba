#include "evosieve/basis.hpp"

#include <utility>

namespace evosieve {

static void validate_columns(const std::vector<LatticeVector>& cols) {
  if (cols.empty()) throw DimensionMismatchError("basis with no columns");
  std::size_t d = cols.size();
  Ring r = cols[0].ring();
  for (const LatticeVector& c : cols) {
    if (c.dim() != d)
      throw DimensionMismatchError("basis must be square (got column of wrong length)");
    if (c.ring() != r) throw RingMismatchError("mixed rings across basis columns");
  }
}

Basis Basis::from_columns(std::vector<LatticeVector> cols) {
  validate_columns(cols);
  mpz_class det2 = det_abs_sq_bareiss(cols);
  if (sgn(det2) == 0) throw SingularBasisError("basis matrix is singular");
  Basis b;
  b.ring_ = cols[0].ring();
  b.cols_ = std::move(cols);
  b.det_abs_sq_ = std::move(det2);
  return b;
}

Basis Basis::with_known_det(std::vector<LatticeVector> cols,
                            mpz_class det_abs_sq) {
  validate_columns(cols);
  if (sgn(det_abs_sq) <= 0)
    throw SingularBasisError("known |det|^2 must be positive");
  Basis b;
  b.ring_ = cols[0].ring();
  b.cols_ = std::move(cols);
  b.det_abs_sq_ = std::move(det_abs_sq);
  return b;
}

mpz_class det_abs_sq_bareiss(const std::vector<LatticeVector>& cols) {
  validate_columns(cols);
  std::size_t d = cols.size();
  Ring r = cols[0].ring();
  // m[i][j]: row i, column j
  std::vector<std::vector<RingScalar>> m(d, std::vector<RingScalar>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m[i][j] = cols[j][i];

  RingScalar prev = RingScalar::one(r);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < d && m[p][k].is_zero()) ++p;
      if (p == d) return mpz_class(0);
      std::swap(m[k], m[p]);  // sign flip is irrelevant for |det|
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        RingScalar num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divexact(num, prev);
      }
      m[i][k] = RingScalar::zero(r);
    }
    prev = m[k][k];
  }
  return m[d - 1][d - 1].abs_sq();
}

LatticeVector embed_vector(const LatticeVector& v) {
  if (v.ring() == Ring::Integer) return v;
  std::vector<RingScalar> e;
  e.reserve(2 * v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    e.push_back(RingScalar::integer(v[i].re));
    e.push_back(RingScalar::integer(v[i].im));
  }
  return LatticeVector(std::move(e));
}

Basis Basis::real_embedding() const {
  if (ring_ == Ring::Integer) return *this;
  std::size_t d = dim();
  std::vector<LatticeVector> ecols;
  ecols.reserve(2 * d);
  for (std::size_t j = 0; j < d; ++j) {
    ecols.push_back(embed_vector(cols_[j]));
    // column for i * b_j: entry a+bi becomes -b + ai
    std::vector<RingScalar> e;
    e.reserve(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
      e.push_back(RingScalar::integer(-cols_[j][i].im));
      e.push_back(RingScalar::integer(cols_[j][i].re));
    }
    ecols.push_back(LatticeVector(std::move(e)));
  }
  // det of the embedded matrix is |det|^2 of the original, so its square
  // is the cached value squared.
  return Basis::with_known_det(std::move(ecols), det_abs_sq_ * det_abs_sq_);
}

}  // namespace evosieve
