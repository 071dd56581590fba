#include "evosieve/vector.hpp"

namespace evosieve {

LatticeVector::LatticeVector(std::vector<RingScalar> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionMismatchError("empty lattice vector");
  ring_ = entries_[0].ring;
  norm_sq_ = 0;
  for (const RingScalar& e : entries_) {
    if (e.ring != ring_) throw RingMismatchError("mixed rings in vector");
    norm_sq_ += e.abs_sq();
  }
}

LatticeVector LatticeVector::zero(Ring r, std::size_t dim) {
  std::vector<RingScalar> e(dim, RingScalar::zero(r));
  return LatticeVector(std::move(e));
}

LatticeVector LatticeVector::from_ints(const std::vector<long>& v) {
  std::vector<RingScalar> e;
  e.reserve(v.size());
  for (long x : v) e.push_back(RingScalar::integer(mpz_class(x)));
  return LatticeVector(std::move(e));
}

std::string LatticeVector::canonical_key() const {
  std::string key;
  for (const RingScalar& e : entries_) {
    key += e.re.get_str();
    if (ring_ == Ring::Gaussian) {
      key += ',';
      key += e.im.get_str();
    }
    key += ';';
  }
  return key;
}

std::string LatticeVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].str();
  }
  out += ")";
  return out;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  if (a.ring() != b.ring() || a.dim() != b.dim()) return false;
  if (a.norm_sq() != b.norm_sq()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

int cmp_vectors(const LatticeVector& a, const LatticeVector& b) {
  int c = cmp(a.norm_sq(), b.norm_sq());
  if (c != 0) return c;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    c = cmp_scalar(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

bool norm_less(const LatticeVector& a, const LatticeVector& b) {
  return cmp_vectors(a, b) < 0;
}

RingScalar inner_product(const LatticeVector& u, const LatticeVector& v) {
  if (u.ring() != v.ring()) throw RingMismatchError("inner_product ring mismatch");
  if (u.dim() != v.dim())
    throw DimensionMismatchError("inner_product dimension mismatch");
  RingScalar acc = RingScalar::zero(u.ring());
  if (u.ring() == Ring::Integer) {
    for (std::size_t i = 0; i < u.dim(); ++i) acc.re += u[i].re * v[i].re;
    return acc;
  }
  for (std::size_t i = 0; i < u.dim(); ++i) {
    // conj(u_i) * v_i
    acc.re += u[i].re * v[i].re + u[i].im * v[i].im;
    acc.im += u[i].re * v[i].im - u[i].im * v[i].re;
  }
  return acc;
}

LatticeVector sub_scaled(const LatticeVector& v, const RingScalar& k,
                         const LatticeVector& u) {
  if (u.ring() != v.ring() || k.ring != v.ring())
    throw RingMismatchError("sub_scaled ring mismatch");
  if (u.dim() != v.dim())
    throw DimensionMismatchError("sub_scaled dimension mismatch");
  std::vector<RingScalar> e;
  e.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e.push_back(v[i] - k * u[i]);
  return LatticeVector(std::move(e));
}

LatticeVector negate(const LatticeVector& v) {
  std::vector<RingScalar> e;
  e.reserve(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) e.push_back(-v[i]);
  return LatticeVector(std::move(e));
}

mpz_class sub_scaled_norm_sq(const mpz_class& norm_v, const mpz_class& norm_u,
                             const RingScalar& s, const RingScalar& k) {
  // Re(conj(k) s) = k.re*s.re + k.im*s.im
  mpz_class cross = k.re * s.re + k.im * s.im;
  return norm_v - 2 * cross + k.abs_sq() * norm_u;
}

}  // namespace evosieve
