#include "evosieve/ring.hpp"

#include <cmath>
#include <cstddef>

namespace evosieve {

const char* ring_name(Ring r) {
  return r == Ring::Integer ? "int" : "gaussian";
}

RingScalar RingScalar::integer(mpz_class v) {
  RingScalar s;
  s.ring = Ring::Integer;
  s.re = std::move(v);
  return s;
}

RingScalar RingScalar::gaussian(mpz_class a, mpz_class b) {
  RingScalar s;
  s.ring = Ring::Gaussian;
  s.re = std::move(a);
  s.im = std::move(b);
  return s;
}

RingScalar RingScalar::zero(Ring r) {
  RingScalar s;
  s.ring = r;
  return s;
}

RingScalar RingScalar::one(Ring r) {
  RingScalar s;
  s.ring = r;
  s.re = 1;
  return s;
}

RingScalar RingScalar::conj() const {
  RingScalar s = *this;
  s.im = -s.im;
  return s;
}

mpz_class RingScalar::abs_sq() const {
  return re * re + im * im;
}

std::string RingScalar::str() const {
  if (ring == Ring::Integer) return re.get_str();
  std::string out = re.get_str();
  out += (sgn(im) < 0) ? "-" : "+";
  out += mpz_class(abs(im)).get_str();
  out += "i";
  return out;
}

static void require_same_ring(const RingScalar& a, const RingScalar& b) {
  if (a.ring != b.ring) throw RingMismatchError("ring mismatch in scalar op");
}

RingScalar operator+(const RingScalar& a, const RingScalar& b) {
  require_same_ring(a, b);
  RingScalar s;
  s.ring = a.ring;
  s.re = a.re + b.re;
  s.im = a.im + b.im;
  return s;
}

RingScalar operator-(const RingScalar& a, const RingScalar& b) {
  require_same_ring(a, b);
  RingScalar s;
  s.ring = a.ring;
  s.re = a.re - b.re;
  s.im = a.im - b.im;
  return s;
}

RingScalar operator*(const RingScalar& a, const RingScalar& b) {
  require_same_ring(a, b);
  RingScalar s;
  s.ring = a.ring;
  if (a.ring == Ring::Integer) {
    s.re = a.re * b.re;
  } else {
    s.re = a.re * b.re - a.im * b.im;
    s.im = a.re * b.im + a.im * b.re;
  }
  return s;
}

RingScalar operator-(const RingScalar& a) {
  RingScalar s;
  s.ring = a.ring;
  s.re = -a.re;
  s.im = -a.im;
  return s;
}

bool operator==(const RingScalar& a, const RingScalar& b) {
  return a.ring == b.ring && a.re == b.re && a.im == b.im;
}

RingScalar divexact(const RingScalar& a, const RingScalar& b) {
  require_same_ring(a, b);
  RingScalar q;
  q.ring = a.ring;
  if (a.ring == Ring::Integer) {
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  // a/b = a * conj(b) / |b|^2, each component divisible exactly when b | a
  mpz_class nb = b.abs_sq();
  mpz_class nr = a.re * b.re + a.im * b.im;
  mpz_class ni = a.im * b.re - a.re * b.im;
  mpz_divexact(q.re.get_mpz_t(), nr.get_mpz_t(), nb.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), ni.get_mpz_t(), nb.get_mpz_t());
  return q;
}

int cmp_scalar(const RingScalar& a, const RingScalar& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

mpz_class round_ratio_half_away(const mpz_class& num, const mpz_class& den) {
  // floor((2|num| + den) / (2 den)) rounds |num|/den half away from zero;
  // floor equals truncation here because the operand is nonnegative.
  mpz_class two_den = 2 * den;
  mpz_class q;
  if (sgn(num) >= 0) {
    mpz_class t = 2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), two_den.get_mpz_t());
    return q;
  }
  mpz_class t = -2 * num + den;
  mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), two_den.get_mpz_t());
  return -q;
}

mpz_class round_half_away(const mpq_class& q) {
  return round_ratio_half_away(q.get_num(), q.get_den());
}

RingScalar round_nearest(const ProjectionCoefficient& z, Ring ring) {
  if (ring == Ring::Integer) {
    if (sgn(z.im) != 0)
      throw RingMismatchError("nonzero imaginary part in Integer-ring rounding");
    return RingScalar::integer(round_half_away(z.re));
  }
  return RingScalar::gaussian(round_half_away(z.re), round_half_away(z.im));
}

double log2_mpz(const mpz_class& v) {
  if (sgn(v) <= 0) throw std::domain_error("log2_mpz of nonpositive value");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp2);
}

double sqrt_mpz_to_double(const mpz_class& v) {
  if (sgn(v) < 0) throw std::domain_error("sqrt of negative value");
  if (sgn(v) == 0) return 0.0;
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  // v = mant * 2^exp2 with mant in [0.5, 1); split the exponent evenly
  if (exp2 % 2 != 0) {
    mant *= 2.0;
    exp2 -= 1;
  }
  return std::ldexp(std::sqrt(mant), static_cast<int>(exp2 / 2));
}

mpq_class parse_decimal_rational(const std::string& s) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = (s[pos] == '-');
    ++pos;
  }
  std::string digits;
  std::size_t frac_len = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_dot) throw ParseError("malformed decimal: " + s);
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else {
      throw ParseError("malformed decimal: " + s);
    }
  }
  if (!seen_digit) throw ParseError("malformed decimal: " + s);
  mpz_class num(digits, 10);
  if (neg) num = -num;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace evosieve
