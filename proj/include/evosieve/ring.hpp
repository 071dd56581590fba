#pragma once

#include <gmpxx.h>

#include <string>

#include "evosieve/errors.hpp"

namespace evosieve {

enum class Ring { Integer, Gaussian };

const char* ring_name(Ring r);

// Element of the active coefficient ring: a rational integer, or a Gaussian
// integer re + im*i. Arithmetic is exact; im stays 0 in the Integer ring.
struct RingScalar {
  Ring ring = Ring::Integer;
  mpz_class re;
  mpz_class im;

  RingScalar() = default;
  static RingScalar integer(mpz_class v);
  static RingScalar gaussian(mpz_class a, mpz_class b);
  static RingScalar zero(Ring r);
  static RingScalar one(Ring r);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  RingScalar conj() const;       // complex conjugate (identity over Z)
  mpz_class abs_sq() const;      // re^2 + im^2
  std::string str() const;       // "a" or "a+bi" with explicit sign
};

RingScalar operator+(const RingScalar& a, const RingScalar& b);
RingScalar operator-(const RingScalar& a, const RingScalar& b);
RingScalar operator*(const RingScalar& a, const RingScalar& b);
RingScalar operator-(const RingScalar& a);
bool operator==(const RingScalar& a, const RingScalar& b);

// Exact quotient a/b; precondition: b divides a in the ring (Bareiss use).
RingScalar divexact(const RingScalar& a, const RingScalar& b);

// Three-way comparison for deterministic tie-breaks: (re, im) lexicographic.
int cmp_scalar(const RingScalar& a, const RingScalar& b);

// Exact complex rational; Gram-Schmidt / projection coefficients live here.
// im is 0 for Integer-ring inputs.
struct ProjectionCoefficient {
  mpq_class re;
  mpq_class im;
};

// Nearest integer to num/den (den > 0), ties rounded away from zero.
mpz_class round_ratio_half_away(const mpz_class& num, const mpz_class& den);

// Nearest integer to q, ties away from zero.
mpz_class round_half_away(const mpq_class& q);

// Componentwise nearest ring element to z.
RingScalar round_nearest(const ProjectionCoefficient& z, Ring ring);

// ---- numeric helpers ----

// log2 of a positive integer, as a double (exact for small values).
double log2_mpz(const mpz_class& v);

// sqrt of a nonnegative integer as a double, safe for values beyond
// double range (computed via log-domain when needed).
double sqrt_mpz_to_double(const mpz_class& v);

// Parse a decimal string ("0.9999999", "-1.25e-3" not supported; plain
// fixed-point with optional sign) into an exact rational.
mpq_class parse_decimal_rational(const std::string& s);

}  // namespace evosieve
