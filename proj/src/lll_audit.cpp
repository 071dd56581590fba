#include "evosieve/reduction.hpp"

#include <cstddef>
#include <sstream>

namespace evosieve {

// Exact-rational audit of the LLL postconditions. Kept intentionally separate
// from the reduction engines: classical Gram-Schmidt straight from the
// definition, no shared state, no shared helpers.
LLLAudit check_lll_postconditions(const Basis& b, const mpq_class& delta,
                                  double tau) {
  const Basis work = (b.ring() == Ring::Gaussian) ? b.real_embedding() : b;
  const std::size_t d = work.dim();
  LLLAudit audit;
  audit.size_reduced = true;
  audit.lovasz = true;

  mpq_class tau_q(tau);  // exact dyadic value of the double
  mpq_class half_plus = mpq_class(1, 2) + tau_q;

  // star[k] = b_k - sum_{j<k} mu[k][j] star[j], straight from the definition
  std::vector<std::vector<mpq_class>> star(d);
  std::vector<std::vector<mpq_class>> mu(d);
  std::vector<mpq_class> rnorm(d);
  for (std::size_t k = 0; k < d; ++k) {
    star[k].assign(d, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) star[k][i] = mpq_class(work.column(k)[i].re);
    mu[k].assign(k, mpq_class(0));
    for (std::size_t j = 0; j < k; ++j) {
      mpq_class dot(0);
      for (std::size_t i = 0; i < d; ++i)
        dot += mpq_class(work.column(k)[i].re) * star[j][i];
      mu[k][j] = dot / rnorm[j];
    }
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < d; ++i) star[k][i] -= mu[k][j] * star[j][i];
    mpq_class nn(0);
    for (std::size_t i = 0; i < d; ++i) nn += star[k][i] * star[k][i];
    rnorm[k] = nn;
    if (sgn(rnorm[k]) == 0) {
      audit.size_reduced = false;
      audit.lovasz = false;
      audit.detail = "dependent column " + std::to_string(k);
      return audit;
    }
  }

  for (std::size_t k = 1; k < d && audit.pass(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (abs(mu[k][j]) > half_plus) {
        audit.size_reduced = false;
        std::ostringstream os;
        os << "size reduction fails at mu[" << k << "][" << j
           << "] = " << mu[k][j].get_d();
        audit.detail = os.str();
        break;
      }
    }
    if (!audit.size_reduced) break;
    // r_k >= (delta - mu_{k,k-1}^2) r_{k-1}, with relative slack tau
    mpq_class rhs = (delta - mu[k][k - 1] * mu[k][k - 1] - tau_q) * rnorm[k - 1];
    if (rnorm[k] < rhs) {
      audit.lovasz = false;
      std::ostringstream os;
      os << "Lovasz condition fails between columns " << (k - 1) << " and " << k;
      audit.detail = os.str();
    }
  }
  return audit;
}

}  // namespace evosieve
