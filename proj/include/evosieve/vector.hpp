#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evosieve/ring.hpp"

namespace evosieve {

// Immutable lattice vector with a cached exact squared norm.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<RingScalar> entries);
  static LatticeVector zero(Ring r, std::size_t dim);
  // Convenience for tests and literals; Integer ring.
  static LatticeVector from_ints(const std::vector<long>& v);

  std::size_t dim() const { return entries_.size(); }
  Ring ring() const { return ring_; }
  const RingScalar& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<RingScalar>& entries() const { return entries_; }
  const mpz_class& norm_sq() const { return norm_sq_; }
  bool is_zero() const { return sgn(norm_sq_) == 0; }
  double norm() const { return sqrt_mpz_to_double(norm_sq_); }

  // Sign-sensitive encoding used for population dedup keys.
  std::string canonical_key() const;
  std::string str() const;  // "(a, b, ...)" for diagnostics

 private:
  std::vector<RingScalar> entries_;
  mpz_class norm_sq_;
  Ring ring_ = Ring::Integer;
};

bool operator==(const LatticeVector& a, const LatticeVector& b);

// Total order by (norm_sq, entrywise scalar compare): deterministic, and
// consistent with "shorter is better".
int cmp_vectors(const LatticeVector& a, const LatticeVector& b);
bool norm_less(const LatticeVector& a, const LatticeVector& b);

// <u, v>: conjugate-linear in the first argument over Z[i]; plain dot over Z.
// Returned in the ambient ring (imaginary part 0 over Z).
RingScalar inner_product(const LatticeVector& u, const LatticeVector& v);

// v - k*u
LatticeVector sub_scaled(const LatticeVector& v, const RingScalar& k,
                         const LatticeVector& u);

LatticeVector negate(const LatticeVector& v);

// ||v - k*u||^2 from cached data: ||v||^2 - 2 Re(conj(k) s) + |k|^2 ||u||^2
// where s = <u, v>. Lets callers reject long children without building them.
mpz_class sub_scaled_norm_sq(const mpz_class& norm_v, const mpz_class& norm_u,
                             const RingScalar& s, const RingScalar& k);

}  // namespace evosieve
