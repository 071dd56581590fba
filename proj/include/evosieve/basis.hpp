#pragma once

#include <cstddef>
#include <vector>

#include "evosieve/vector.hpp"

namespace evosieve {

// Square, nonsingular basis stored as columns; |det|^2 is computed exactly
// (Bareiss) at construction and cached. Unimodular column operations preserve
// it, so reduction code re-wraps columns with with_known_det.
class Basis {
 public:
  static Basis from_columns(std::vector<LatticeVector> cols);
  // For callers that already know |det|^2 (e.g. after unimodular ops).
  static Basis with_known_det(std::vector<LatticeVector> cols,
                              mpz_class det_abs_sq);

  std::size_t dim() const { return cols_.size(); }
  Ring ring() const { return ring_; }
  const LatticeVector& column(std::size_t j) const { return cols_[j]; }
  const std::vector<LatticeVector>& columns() const { return cols_; }
  const mpz_class& det_abs_sq() const { return det_abs_sq_; }

  // Norm-preserving real embedding: a Gaussian basis of dimension d maps to
  // an Integer basis of dimension 2d (each entry a+bi becomes the 2x2 block
  // [[a, -b], [b, a]]); an Integer basis embeds as itself.
  Basis real_embedding() const;

 private:
  Basis() = default;
  std::vector<LatticeVector> cols_;
  mpz_class det_abs_sq_;
  Ring ring_ = Ring::Integer;
};

// |det|^2 of a square matrix given as columns, by fraction-free elimination.
// Exact over both rings; returns 0 for singular input.
mpz_class det_abs_sq_bareiss(const std::vector<LatticeVector>& cols);

// Embed a single vector the same way real_embedding embeds columns.
LatticeVector embed_vector(const LatticeVector& v);

}  // namespace evosieve
