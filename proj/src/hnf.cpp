#include "evosieve/reduction.hpp"

#include <cstddef>
#include <utility>

namespace evosieve {

// Column-style HNF by integer-preserving column operations: for each row,
// run Euclid across the columns to its right until one nonzero entry
// remains, then reduce the entries to its left into [0, diagonal).
Basis hnf(const Basis& b) {
  if (b.ring() != Ring::Integer)
    throw RingMismatchError("HNF is defined for Integer bases here");
  const std::size_t d = b.dim();
  // m[j][i]: column j, row i
  std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m[j][i] = b.column(j)[i].re;

  mpz_class q;
  for (std::size_t i = 0; i < d; ++i) {
    while (true) {
      // pivot on the smallest magnitude to temper coefficient growth
      std::size_t p = d;
      for (std::size_t j = i; j < d; ++j) {
        if (sgn(m[j][i]) == 0) continue;
        if (p == d || cmp(abs(m[j][i]), abs(m[p][i])) < 0) p = j;
      }
      if (p == d) throw SingularBasisError("HNF met a zero row");
      if (p != i) std::swap(m[p], m[i]);
      if (sgn(m[i][i]) < 0)
        for (std::size_t rr = 0; rr < d; ++rr) m[i][rr] = -m[i][rr];
      bool leftover = false;
      for (std::size_t j = i + 1; j < d; ++j) {
        if (sgn(m[j][i]) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m[j][i].get_mpz_t(), m[i][i].get_mpz_t());
        for (std::size_t rr = 0; rr < d; ++rr) m[j][rr] -= q * m[i][rr];
        if (sgn(m[j][i]) != 0) leftover = true;
      }
      if (!leftover) break;
    }
    for (std::size_t j = 0; j < i; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), m[j][i].get_mpz_t(), m[i][i].get_mpz_t());
      if (sgn(q) != 0)
        for (std::size_t rr = 0; rr < d; ++rr) m[j][rr] -= q * m[i][rr];
    }
  }

  std::vector<LatticeVector> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<RingScalar> e;
    e.reserve(d);
    for (std::size_t i = 0; i < d; ++i) e.push_back(RingScalar::integer(m[j][i]));
    cols.push_back(LatticeVector(std::move(e)));
  }
  return Basis::with_known_det(std::move(cols), b.det_abs_sq());
}

}  // namespace evosieve
